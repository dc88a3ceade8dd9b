// Umbrella header.
#pragma once

#include <eub/bounds.hpp>
#include <eub/closed_forms.hpp>
#include <eub/correlations.hpp>
#include <eub/io.hpp>
#include <eub/matrix.hpp>
#include <eub/measurements.hpp>
#include <eub/states.hpp>
#include <eub/sweep.hpp>
