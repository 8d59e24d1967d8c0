#pragma once

#include "qhom/field.hpp"
#include "qhom/unipoly.hpp"
#include "qhom/bivar_poly.hpp"
#include "qhom/parse.hpp"
#include "qhom/gcd.hpp"
#include "qhom/resultant.hpp"
#include "qhom/newton.hpp"
#include "qhom/homog.hpp"
#include "qhom/laurent.hpp"
#include "qhom/branches.hpp"
#include "qhom/charp.hpp"
#include "qhom/theorem.hpp"
#include "qhom/report_json.hpp"
