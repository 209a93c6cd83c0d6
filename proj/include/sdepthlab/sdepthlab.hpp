#pragma once

#include "sdepthlab/associated.hpp"
#include "sdepthlab/corpus.hpp"
#include "sdepthlab/errors.hpp"
#include "sdepthlab/exponents.hpp"
#include "sdepthlab/invariants.hpp"
#include "sdepthlab/json_format.hpp"
#include "sdepthlab/monomial_ideal.hpp"
#include "sdepthlab/newton.hpp"
#include "sdepthlab/poset.hpp"
#include "sdepthlab/random_ideal.hpp"
#include "sdepthlab/rational_kernel.hpp"
#include "sdepthlab/sdepth.hpp"
#include "sdepthlab/text_format.hpp"
#include "sdepthlab/transfer.hpp"
