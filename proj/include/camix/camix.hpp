#pragma once

// Exact measure-theoretic toolkit for one-dimensional additive cellular
// automata over Z_m: cylinder events as modular linear systems, exact
// Bernoulli measures, and mixing diagnostics for the two-parameter action
// generated by the shift and the automaton.

#include "camix/arith.hpp"
#include "camix/cli.hpp"
#include "camix/errors.hpp"
#include "camix/event.hpp"
#include "camix/matrix.hpp"
#include "camix/mixing.hpp"
#include "camix/modsolve.hpp"
#include "camix/oracle.hpp"
#include "camix/report_io.hpp"
#include "camix/rule.hpp"
#include "camix/smith.hpp"
#include "camix/textio.hpp"
#include "camix/word.hpp"
