/**
 * @file hypermod.hpp
 * @brief Umbrella header.
 */
#pragma once

#include "codes.hpp"
#include "corpus.hpp"
#include "error.hpp"
#include "field.hpp"
#include "forms.hpp"
#include "fspecial.hpp"
#include "group.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "meataxe.hpp"
#include "module.hpp"
#include "poly.hpp"
#include "repro.hpp"
#include "witt.hpp"
