#pragma once

#include "rankiw/dirichlet.hpp"
#include "rankiw/eisenstein.hpp"
#include "rankiw/io/cache.hpp"
#include "rankiw/io/json.hpp"
#include "rankiw/iwasawa.hpp"
#include "rankiw/modsym/newforms.hpp"
#include "rankiw/modsym/space.hpp"
#include "rankiw/modsym/winding.hpp"
#include "rankiw/rankin.hpp"
#include "rankiw/verify/selftest.hpp"
