#pragma once

#include "alexander.hpp"
#include "arrangement.hpp"
#include "braid.hpp"
#include "charvar.hpp"
#include "cyclotomic.hpp"
#include "fox.hpp"
#include "free_group.hpp"
#include "laurent.hpp"
#include "subtorus.hpp"
#include "table1.hpp"
#include "textio.hpp"
