#pragma once

#include "cascades/bounds.hpp"
#include "cascades/cascade.hpp"
#include "cascades/certificate.hpp"
#include "cascades/certify.hpp"
#include "cascades/errors.hpp"
#include "cascades/isolate.hpp"
#include "cascades/polynomial.hpp"
#include "cascades/rational.hpp"
#include "cascades/refine.hpp"
#include "cascades/text.hpp"
#include "cascades/replay.hpp"
