#pragma once

#include "lmode/dynamics.hpp"
#include "lmode/entanglement.hpp"
#include "lmode/errors.hpp"
#include "lmode/fock.hpp"
#include "lmode/full_space.hpp"
#include "lmode/hamiltonian.hpp"
#include "lmode/normal_order.hpp"
#include "lmode/quadratures.hpp"
