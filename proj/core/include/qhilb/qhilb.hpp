#pragma once

#include "qhilb/hilbert.hpp"
#include "qhilb/motivic.hpp"
#include "qhilb/polynomial.hpp"
#include "qhilb/series.hpp"
#include "qhilb/ydiag.hpp"
