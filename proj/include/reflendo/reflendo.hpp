#pragma once

#include "reflendo/bigint.hpp"
#include "reflendo/classify.hpp"
#include "reflendo/counting.hpp"
#include "reflendo/coxeter.hpp"
#include "reflendo/dihedral.hpp"
#include "reflendo/figures.hpp"
#include "reflendo/golden.hpp"
#include "reflendo/group_id.hpp"
#include "reflendo/groups.hpp"
#include "reflendo/oracle.hpp"
#include "reflendo/signed_perm.hpp"
#include "reflendo/stats.hpp"
#include "reflendo/table_row.hpp"
#include "reflendo/tables.hpp"
