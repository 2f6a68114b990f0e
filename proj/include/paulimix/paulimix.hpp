#pragma once

#include "paulimix/qmath.hpp"
#include "paulimix/channels.hpp"
#include "paulimix/divisibility.hpp"
#include "paulimix/dilation.hpp"
#include "paulimix/simulator.hpp"
#include "paulimix/estimation.hpp"
