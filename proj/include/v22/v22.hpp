#pragma once

// Exact symbolic verification toolkit for the one-parameter family of
// anticanonical-degree-22 Fano threefolds with a multiplicative-group action:
// sparse polynomial arithmetic over Q(u) and its quadratic extensions, the
// catalog of named equations and curves, torus-orbit degrees, plane-germ
// classification, blowup intersection numbers, and the check registry.

#include "catalog.hpp"
#include "checkresult.hpp"
#include "chow.hpp"
#include "curves.hpp"
#include "germs.hpp"
#include "mpoly.hpp"
#include "parse.hpp"
#include "quadext.hpp"
#include "rat.hpp"
#include "ratfunc.hpp"
#include "registry.hpp"
#include "report.hpp"
#include "scalar.hpp"
#include "torus.hpp"
#include "ufactor.hpp"
#include "unipoly.hpp"
#include "upoly.hpp"
