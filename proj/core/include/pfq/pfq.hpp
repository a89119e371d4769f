#pragma once

#include "pfq/dixon.hpp"
#include "pfq/errors.hpp"
#include "pfq/exton.hpp"
#include "pfq/report.hpp"
#include "pfq/scalar.hpp"
#include "pfq/series.hpp"
#include "pfq/verify.hpp"
