#ifndef QSMZV_QSMZV_HPP
#define QSMZV_QSMZV_HPP

#include "qsmzv/rational.hpp"
#include "qsmzv/hpoly.hpp"
#include "qsmzv/word.hpp"
#include "qsmzv/index.hpp"
#include "qsmzv/word_poly.hpp"
#include "qsmzv/freealg.hpp"
#include "qsmzv/classical.hpp"
#include "qsmzv/qproducts.hpp"
#include "qsmzv/ewords.hpp"
#include "qsmzv/evaluator.hpp"
#include "qsmzv/series.hpp"
#include "qsmzv/identities.hpp"
#include "qsmzv/io.hpp"
#include "qsmzv/report.hpp"
#include "qsmzv/depth2.hpp"
#include "qsmzv/parser.hpp"
#include "qsmzv/suites.hpp"

#endif
