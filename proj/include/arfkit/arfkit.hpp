#pragma once

#include "arfkit/error.hpp"
#include "arfkit/semigroup.hpp"
#include "arfkit/ideal.hpp"
#include "arfkit/lipman.hpp"
#include "arfkit/arf.hpp"
#include "arfkit/verify.hpp"
#include "arfkit/tree.hpp"
#include "arfkit/io.hpp"
#include "arfkit/census.hpp"
