#pragma once

#include "blockdec/core.hpp"
#include "blockdec/elementary.hpp"
#include "blockdec/gnomon.hpp"
#include "blockdec/stanley.hpp"
#include "blockdec/compression.hpp"
#include "blockdec/subprime.hpp"
#include "blockdec/oracle.hpp"
#include "blockdec/io.hpp"
