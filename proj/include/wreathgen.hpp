#ifndef WREATHGEN_HPP
#define WREATHGEN_HPP

#include "wreathgen/bsgs.hpp"
#include "wreathgen/errors.hpp"
#include "wreathgen/formula.hpp"
#include "wreathgen/fp.hpp"
#include "wreathgen/group.hpp"
#include "wreathgen/modfp.hpp"
#include "wreathgen/oracle.hpp"
#include "wreathgen/permutation.hpp"
#include "wreathgen/tower.hpp"

#endif // WREATHGEN_HPP
