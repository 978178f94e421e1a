#pragma once

// Scalar-diffraction propagation on parallel planes: the angular-spectrum
// transfer function, band-aware sampling strategies (band-limited,
// adaptive-sampling, band-extended, controllable-energy), a type-3 NUFFT,
// Rayleigh-Sommerfeld reference oracles and an evaluation harness.

#include "ceas/apertures.hpp"
#include "ceas/bands.hpp"
#include "ceas/dft.hpp"
#include "ceas/errors.hpp"
#include "ceas/evaluation.hpp"
#include "ceas/fft.hpp"
#include "ceas/field.hpp"
#include "ceas/grid.hpp"
#include "ceas/io.hpp"
#include "ceas/methods.hpp"
#include "ceas/nufft.hpp"
#include "ceas/optics.hpp"
#include "ceas/oracles.hpp"
#include "ceas/propagate.hpp"
#include "ceas/scenario.hpp"
#include "ceas/spectrum.hpp"
