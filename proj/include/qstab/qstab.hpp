#pragma once

#include "qstab/cone.hpp"
#include "qstab/interval.hpp"
#include "qstab/linalg.hpp"
#include "qstab/quiver.hpp"
#include "qstab/rational.hpp"
#include "qstab/sampling.hpp"
#include "qstab/stability.hpp"
