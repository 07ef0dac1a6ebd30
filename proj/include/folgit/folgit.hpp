#ifndef FOLGIT_FOLGIT_HPP
#define FOLGIT_FOLGIT_HPP

#include <folgit/errors.hpp>
#include <folgit/families.hpp>
#include <folgit/foliation.hpp>
#include <folgit/gcd.hpp>
#include <folgit/harness.hpp>
#include <folgit/homog.hpp>
#include <folgit/hull.hpp>
#include <folgit/invariants.hpp>
#include <folgit/locus.hpp>
#include <folgit/parse.hpp>
#include <folgit/poly.hpp>
#include <folgit/random.hpp>
#include <folgit/rational.hpp>
#include <folgit/report.hpp>
#include <folgit/resultant.hpp>
#include <folgit/roots.hpp>
#include <folgit/stability.hpp>
#include <folgit/svg.hpp>
#include <folgit/weights.hpp>

#endif  // FOLGIT_FOLGIT_HPP
