#pragma once

#include "polyharm/christoffel.hpp"
#include "polyharm/critical_points.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/fd_oracle.hpp"
#include "polyharm/finite_difference.hpp"
#include "polyharm/reduced_energy.hpp"
#include "polyharm/section_calculus.hpp"
#include "polyharm/verification.hpp"
