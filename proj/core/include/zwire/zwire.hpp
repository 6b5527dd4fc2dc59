#pragma once

#include "zwire/berry.hpp"
#include "zwire/channel.hpp"
#include "zwire/errors.hpp"
#include "zwire/fd_oracle.hpp"
#include "zwire/field.hpp"
#include "zwire/linalg.hpp"
#include "zwire/regimes.hpp"
#include "zwire/scattering.hpp"
#include "zwire/transfer.hpp"
