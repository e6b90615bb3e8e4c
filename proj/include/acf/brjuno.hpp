#pragma once

#include "acf/brjuno/report.hpp"
#include "acf/brjuno/residual.hpp"
#include "acf/brjuno/semi.hpp"
#include "acf/brjuno/series.hpp"
#include "acf/brjuno/weight.hpp"
