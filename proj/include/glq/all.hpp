#pragma once

#include "glq/chardeg.hpp"
#include "glq/integers.hpp"
#include "glq/labels.hpp"
#include "glq/partitions.hpp"
#include "glq/report_io.hpp"
#include "glq/statistics.hpp"
#include "glq/sweep_config.hpp"
#include "glq/valuations.hpp"
#include "glq/verify.hpp"
