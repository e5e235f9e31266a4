#pragma once

#include "nsg/semigroup.hpp"
#include "nsg/oracle.hpp"
#include "nsg/presentations.hpp"
#include "nsg/constructions.hpp"
