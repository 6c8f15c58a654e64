#pragma once

#include "kfam/checkers.hpp"
#include "kfam/combinatorics.hpp"
#include "kfam/eigensolver.hpp"
#include "kfam/errors.hpp"
#include "kfam/family.hpp"
#include "kfam/generators.hpp"
#include "kfam/io.hpp"
#include "kfam/search.hpp"
#include "kfam/spectra.hpp"
#include "kfam/structure.hpp"
