#pragma once

#include "gitss/classical.hpp"
#include "gitss/dispo.hpp"
#include "gitss/error.hpp"
#include "gitss/exactmath.hpp"
#include "gitss/flags.hpp"
#include "gitss/fourier_motzkin.hpp"
#include "gitss/hilbert_mumford.hpp"
#include "gitss/linalg.hpp"
#include "gitss/repdata.hpp"
