#pragma once

#include "superstab/error.hpp"
#include "superstab/generator.hpp"
#include "superstab/hardness.hpp"
#include "superstab/io.hpp"
#include "superstab/model.hpp"
#include "superstab/oracle.hpp"
#include "superstab/superstable.hpp"
