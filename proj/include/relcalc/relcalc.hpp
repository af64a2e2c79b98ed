#pragma once

// Umbrella header: the FO=/CoR syntax, finite-model semantics, the
// validity-preserving translations and the verification harness.

#include "relcalc/cor/ast.hpp"
#include "relcalc/cor/parse.hpp"
#include "relcalc/cor/print.hpp"
#include "relcalc/cor/sigma2.hpp"
#include "relcalc/errors.hpp"
#include "relcalc/fo/ast.hpp"
#include "relcalc/fo/parse.hpp"
#include "relcalc/fo/prenex.hpp"
#include "relcalc/fo/print.hpp"
#include "relcalc/harness/gen.hpp"
#include "relcalc/harness/suites.hpp"
#include "relcalc/harness/witness.hpp"
#include "relcalc/model/enumerate.hpp"
#include "relcalc/model/isomorphism.hpp"
#include "relcalc/model/ktuple.hpp"
#include "relcalc/model/relation.hpp"
#include "relcalc/model/structure.hpp"
#include "relcalc/sem/eval_cor.hpp"
#include "relcalc/sem/eval_fo.hpp"
#include "relcalc/sem/validity.hpp"
#include "relcalc/trans/arity.hpp"
#include "relcalc/trans/equality_elim.hpp"
#include "relcalc/trans/fo3.hpp"
#include "relcalc/trans/fold.hpp"
#include "relcalc/trans/gamma.hpp"
#include "relcalc/trans/godel.hpp"
#include "relcalc/trans/schroder.hpp"
#include "relcalc/trans/sigma2_normalize.hpp"
#include "relcalc/trans/standard.hpp"
#include "relcalc/trans/tk.hpp"
#include "relcalc/trans/tseitin.hpp"
