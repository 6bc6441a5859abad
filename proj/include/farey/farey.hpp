#pragma once

#include <farey/bijections.hpp>
#include <farey/fraction.hpp>
#include <farey/identities.hpp>
#include <farey/io.hpp>
#include <farey/lattice.hpp>
#include <farey/neighbors.hpp>
#include <farey/sequences.hpp>
