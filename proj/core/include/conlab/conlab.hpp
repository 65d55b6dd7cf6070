#pragma once

#include "conlab/dynamics.hpp"
#include "conlab/errors.hpp"
#include "conlab/generators.hpp"
#include "conlab/graph.hpp"
#include "conlab/io.hpp"
#include "conlab/reduction.hpp"
#include "conlab/rng.hpp"
#include "conlab/spectral.hpp"
