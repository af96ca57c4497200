#pragma once

#include "orthoglide/beam_oracle.hpp"
#include "orthoglide/errors.hpp"
#include "orthoglide/format.hpp"
#include "orthoglide/kinematics.hpp"
#include "orthoglide/machine_file.hpp"
#include "orthoglide/model.hpp"
#include "orthoglide/sensitivity.hpp"
#include "orthoglide/stiffness.hpp"
