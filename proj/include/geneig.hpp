#ifndef GENEIG_HPP
#define GENEIG_HPP

#include "geneig/annihilator.hpp"
#include "geneig/bench.hpp"
#include "geneig/chains.hpp"
#include "geneig/counters.hpp"
#include "geneig/echelon.hpp"
#include "geneig/factor.hpp"
#include "geneig/genmat.hpp"
#include "geneig/jordan_krylov.hpp"
#include "geneig/json_io.hpp"
#include "geneig/matrix.hpp"
#include "geneig/modular.hpp"
#include "geneig/pipeline.hpp"
#include "geneig/poly.hpp"
#include "geneig/rational.hpp"

#endif // GENEIG_HPP
