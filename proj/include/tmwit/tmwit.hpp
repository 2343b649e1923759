#pragma once

#include "tmwit/digitcore.hpp"
#include "tmwit/error.hpp"
#include "tmwit/genbase.hpp"
#include "tmwit/natural.hpp"
#include "tmwit/oracle.hpp"
#include "tmwit/parallel.hpp"
#include "tmwit/query.hpp"
#include "tmwit/scanner.hpp"
#include "tmwit/serialize.hpp"
#include "tmwit/witness.hpp"
