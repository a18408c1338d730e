#pragma once

// Umbrella header for the betanum library: exact arithmetic over Q(beta),
// expansions of unity and their classification, greedy beta-expansions,
// canonical substitutions and their fixed points, exact enumeration of the
// nonnegative beta-integers, and the asymptotics b_n ~ c_beta n with exact
// drift sweeps and conjugate-root bounds.

#include "betanum/errors.hpp"
#include "betanum/bigint.hpp"
#include "betanum/rational.hpp"
#include "betanum/polynomial.hpp"
#include "betanum/algebraic_real.hpp"
#include "betanum/field_element.hpp"
#include "betanum/digit_word.hpp"
#include "betanum/renyi.hpp"
#include "betanum/expansion.hpp"
#include "betanum/words.hpp"
#include "betanum/beta_integers.hpp"
#include "betanum/bigfloat.hpp"
#include "betanum/roots.hpp"
#include "betanum/asymptotics.hpp"
#include "betanum/presets.hpp"
