#pragma once

#include "plcpk/alphabet.hpp"
#include "plcpk/applications.hpp"
#include "plcpk/config.hpp"
#include "plcpk/experiment.hpp"
#include "plcpk/extend.hpp"
#include "plcpk/gram.hpp"
#include "plcpk/gram_set.hpp"
#include "plcpk/io.hpp"
#include "plcpk/oracle.hpp"
#include "plcpk/plcp_edit.hpp"
#include "plcpk/plcp_hamming.hpp"
#include "plcpk/plcp_result.hpp"
#include "plcpk/rng.hpp"
#include "plcpk/suffix_index.hpp"
#include "plcpk/yfast.hpp"
