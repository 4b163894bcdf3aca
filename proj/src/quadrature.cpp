#include "fdirac/quadrature.hpp"

namespace fdirac {

QuadratureGrid gauss_legendre(int n) {
    auto basic = detail::gauss_legendre_basic<double>(n);
    QuadratureGrid g;
    g.n = n;
    g.nodes = std::move(basic.nodes);
    g.weights = std::move(basic.weights);
    return g;
}

}  // namespace fdirac
