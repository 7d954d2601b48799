// Everything at once.
#pragma once

#include "cosetder/curve.hpp"
#include "cosetder/ffield.hpp"
#include "cosetder/fpoly.hpp"
#include "cosetder/lemmata.hpp"
#include "cosetder/mat2.hpp"
#include "cosetder/mpoly.hpp"
#include "cosetder/numfield.hpp"
#include "cosetder/parallel.hpp"
#include "cosetder/polyhedral.hpp"
#include "cosetder/rational.hpp"
#include "cosetder/report.hpp"
#include "cosetder/subgroups.hpp"
#include "cosetder/theorem.hpp"
