#pragma once

// Umbrella header.

#include <leibniz/field.hpp>
#include <leibniz/matrix.hpp>
#include <leibniz/linalg.hpp>
#include <leibniz/algebra.hpp>
#include <leibniz/crossed.hpp>
#include <leibniz/homology.hpp>
#include <leibniz/products.hpp>
#include <leibniz/gamma.hpp>
#include <leibniz/theorems.hpp>
#include <leibniz/catalog.hpp>
#include <leibniz/builtin_catalog.hpp>
#include <leibniz/emit.hpp>
