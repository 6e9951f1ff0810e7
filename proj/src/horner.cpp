#include "mrmm/horner.hpp"

#include "mrmm/error.hpp"

namespace mrmm {

HornerForm horner_decompose(const PolyF2& f, unsigned n) {
    auto deg = f.degree();
    if (!deg) throw InvalidInput("cannot decompose the zero polynomial");
    if (n < 1 || n > *deg) throw InvalidInput("block size must be in 1..deg(f)");
    std::size_t d = *deg;
    HornerForm form;
    form.n = n;
    form.m = static_cast<unsigned>(d / n);
    form.r = static_cast<unsigned>(d % n);
    form.pieces.reserve(form.m + 1);
    for (unsigned i = 0; i <= form.m; ++i) {
        std::size_t lo = static_cast<std::size_t>(i) * n;
        std::size_t hi = i < form.m ? lo + n : d + 1;
        PolyF2 piece;
        for (std::size_t k = lo; k < hi; ++k)
            if (f.coeff(k)) piece.set_coeff(k - lo, true);
        form.pieces.push_back(std::move(piece));
    }
    return form;
}

PolyF2 horner_recompose(const HornerForm& form) {
    PolyF2 f;
    for (std::size_t i = form.pieces.size(); i-- > 0;) {
        f = f.shifted(form.n);
        f += form.pieces[i];
    }
    return f;
}

namespace {

void check_shape(const PolyF2& f, unsigned m, unsigned n) {
    if (m < 1 || n < 1) throw InvalidInput("m and n must be >= 1");
    auto deg = f.degree();
    if (!deg || *deg != static_cast<std::size_t>(m) * n)
        throw InvalidInput("polynomial degree must equal m*n");
}

}  // namespace

std::vector<BitMatrix> horner_matrix(const PolyF2& f, unsigned m, unsigned n) {
    check_shape(f, m, n);
    std::vector<BitMatrix> cs;
    cs.reserve(n);
    for (unsigned j = 0; j < n; ++j) {
        BitMatrix c(m, m);
        for (unsigned i = 0; i < m; ++i)
            c.set(i, m - 1, f.coeff(static_cast<std::size_t>(i) * n + j));
        cs.push_back(std::move(c));
    }
    for (unsigned i = 1; i < m; ++i) cs[0].set(i, i - 1, true);
    return cs;
}

MrmmSpec extract_spec(const PolyF2& f, unsigned m, unsigned n) {
    check_shape(f, m, n);
    if (m > 64) throw InvalidInput("word width m must be <= 64");
    std::vector<std::uint64_t> v_cols(n, 0);
    for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i < m; ++i)
            if (f.coeff(static_cast<std::size_t>(i) * n + j))
                v_cols[j] |= std::uint64_t{1} << (m - 1 - i);
    return MrmmSpec::create(m, n, f, std::move(v_cols));
}

}  // namespace mrmm
