#pragma once

#include "suptrop/errors.hpp"
#include "suptrop/semiring.hpp"
#include "suptrop/matrix.hpp"
#include "suptrop/determinant.hpp"
#include "suptrop/nabla.hpp"
#include "suptrop/classify.hpp"
#include "suptrop/monoid.hpp"
#include "suptrop/elementary.hpp"
#include "suptrop/oracle.hpp"
#include "suptrop/io.hpp"
