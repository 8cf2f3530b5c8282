#pragma once

#include "tits/root_datum.hpp"
#include "tits/weyl.hpp"
#include "tits/torus.hpp"
#include "tits/tits_lift.hpp"
#include "tits/finite_field.hpp"
#include "tits/matrix_oracle.hpp"
