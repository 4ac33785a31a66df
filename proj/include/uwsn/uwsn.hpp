#pragma once

#include "uwsn/acoustic.hpp"
#include "uwsn/core.hpp"
#include "uwsn/energy.hpp"
#include "uwsn/geometry.hpp"
#include "uwsn/io.hpp"
#include "uwsn/kcoverage.hpp"
#include "uwsn/partition.hpp"
#include "uwsn/placement.hpp"
#include "uwsn/routing.hpp"
#include "uwsn/rng.hpp"
#include "uwsn/verify.hpp"
