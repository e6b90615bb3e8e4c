#pragma once

#include "acf/alpha/alpha_cf.hpp"
#include "acf/alpha/bounds.hpp"
#include "acf/analysis/bench.hpp"
#include "acf/analysis/corpus.hpp"
#include "acf/analysis/figures.hpp"
#include "acf/analysis/holder.hpp"
#include "acf/brjuno.hpp"
#include "acf/byexcess/dictionary.hpp"
#include "acf/byexcess/minus_cf.hpp"
#include "acf/error.hpp"
#include "acf/numeric/parse.hpp"
#include "acf/numeric/real_value.hpp"
