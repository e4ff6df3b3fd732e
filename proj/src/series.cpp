#include "m24rh/series.hpp"

namespace m24rh {

TruncatedSeries<Rat> binomial_factor_pow(int j, const Rat& c, const Int& E, int N) {
    std::vector<Rat> out(static_cast<size_t>(std::max(0, N + 1)), Rat(0));
    Rat term(1), cpow(1);
    for (long k = 0; static_cast<long>(k) * j <= N; ++k) {
        out[static_cast<size_t>(k * j)] = term * cpow;
        term *= Rat(E - k, k + 1);
        cpow *= c;
    }
    return TruncatedSeries<Rat>(0, std::move(out), N);
}

std::vector<Int> plethystic_ranks(const TruncatedSeries<Rat>& f, int N) {
    if (f.valuation_bound() < 0 || f.coeff(0) != 1)
        throw SeriesError("plethystic_ranks requires constant term 1");
    if (f.order() < N) throw SeriesError("plethystic_ranks: series not known to requested order");
    TruncatedSeries<Rat> g = f.truncated(N);
    std::vector<Int> e;
    e.reserve(static_cast<size_t>(N));
    for (int j = 1; j <= N; ++j) {
        Rat cj = -g.coeff(j);
        if (!rat_is_int(cj))
            throw SeriesError("plethystic_ranks: non-integer exponent at j=" + std::to_string(j) +
                              " (" + rat_str(cj) + "); input is not an integral product form");
        Int ej = rat_num(cj);
        e.push_back(ej);
        if (ej != 0) {
            // divide out (1-(-x)^j)^{(-1)^j e_j}
            Rat base = (j % 2 == 0) ? Rat(-1) : Rat(1);
            Int expo = (j % 2 == 0) ? -ej : ej;
            g = g * binomial_factor_pow(j, base, expo, N);
        }
    }
    return e;
}

TruncatedSeries<Rat> plethystic_product(const std::vector<Int>& e, int N) {
    TruncatedSeries<Rat> g = TruncatedSeries<Rat>::constant(Rat(1), N);
    for (size_t idx = 0; idx < e.size(); ++idx) {
        int j = static_cast<int>(idx) + 1;
        if (j > N) break;
        if (e[idx] == 0) continue;
        Rat base = (j % 2 == 0) ? Rat(-1) : Rat(1);
        Int expo = (j % 2 == 0) ? e[idx] : -e[idx];
        g = g * binomial_factor_pow(j, base, expo, N);
    }
    return g;
}

}  // namespace m24rh
