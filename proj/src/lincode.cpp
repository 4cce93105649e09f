#include "grasswt/lincode.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "grasswt/subspace_search.hpp"

namespace grasswt {

namespace {

std::vector<uint8_t> unpack_message(uint64_t idx, int k, int q) {
    std::vector<uint8_t> v(k);
    for (int j = k - 1; j >= 0; --j) {
        v[j] = uint8_t(idx % uint64_t(q));
        idx /= uint64_t(q);
    }
    return v;
}

FMatrix rows_to_matrix(const Field& F, const std::vector<uint64_t>& rows, int k) {
    FMatrix M(F, int(rows.size()), k);
    for (size_t i = 0; i < rows.size(); ++i) {
        std::vector<uint8_t> v = unpack_message(rows[i], k, F.q());
        std::copy(v.begin(), v.end(), M.row(int(i)));
    }
    return M;
}

// true iff the number of r-dimensional subspaces of F_q^k fits the budget
bool subspace_count_within(int k, int r, int q, uint64_t budget) {
    try {
        return gaussian_binomial(k, r, q) <= budget;
    } catch (const Error& e) {
        if (e.code() == Errc::Overflow) return false;
        throw;
    }
}

void check_search_budget(int k, int r, int q, const SearchLimits& lim) {
    if (!subspace_count_within(k, r, q, lim.subspace_budget))
        fail(Errc::SearchBudgetExceeded, "subspace enumeration beyond budget");
}

WeightWitness primal_weight(const LinearCode& C, const CodewordTable& T, int r,
                            const SearchLimits& lim) {
    const Field& F = C.field();
    MinOrResult res =
        min_or_search(T.masks.data(), T.words, C.k(), F.q(), F.onev(), r, lim.workers);
    WeightWitness w{r, res.best, rows_to_matrix(F, res.rows, C.k()), res.visited};
    if (subcode_norm(C, w.messages) != w.norm)
        throw std::logic_error("weight search witness fails to reproduce its norm");
    return w;
}

WeightWitness section_weight(const LinearCode& C, const std::vector<uint32_t>& colcount, int r,
                             const SearchLimits& lim) {
    const Field& F = C.field();
    MaxSumResult res = max_sum_search(colcount, F, C.k(), C.k() - r, lim.workers);
    // positions vanishing on a subcode are the columns inside the kernel of
    // its message basis, so the basis is recovered as the perp
    Subspace U = Subspace::span_of(rows_to_matrix(F, res.rows, C.k()));
    WeightWitness w{r, C.n() - int(res.best), perp(U).basis, res.visited};
    if (w.messages.rows != r || subcode_norm(C, w.messages) != w.norm)
        throw std::logic_error("weight search witness fails to reproduce its norm");
    return w;
}

std::vector<uint32_t> column_multiplicity(const LinearCode& C, const SearchLimits& lim) {
    const Field& F = C.field();
    int k = C.k(), q = F.q();
    uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        if (__builtin_mul_overflow(total, uint64_t(q), &total) || total > lim.codeword_budget)
            fail(Errc::EnumerationBudgetExceeded, "column table beyond budget");
    }
    std::vector<uint32_t> count(total, 0);
    for (int j = 0; j < C.n(); ++j) {
        uint64_t idx = 0;
        for (int i = 0; i < k; ++i) idx = idx * uint64_t(q) + C.gen.at(i, j);
        ++count[idx];
    }
    return count;
}

} // namespace

LinearCode LinearCode::from_generator(FMatrix G) {
    if (!G.f || G.rows < 1 || G.cols < 1) fail(Errc::BadFormat, "empty generator matrix");
    if (G.cols > 65535) fail(Errc::Overflow, "code length beyond the weight tables");
    if (rank_of(G) != G.rows) fail(Errc::RankDeficient, "generator rows are dependent");
    return LinearCode{std::move(G)};
}

bool LinearCode::nondegenerate() const {
    for (int j = 0; j < n(); ++j) {
        bool nonzero = false;
        for (int i = 0; i < k() && !nonzero; ++i) nonzero = gen.at(i, j) != 0;
        if (!nonzero) return false;
    }
    return true;
}

std::vector<uint8_t> LinearCode::encode(const std::vector<uint8_t>& message) const {
    if (int(message.size()) != k()) fail(Errc::AmbientMismatch, "message length is not k");
    const Field& F = field();
    std::vector<uint8_t> out(n(), 0);
    for (int i = 0; i < k(); ++i) {
        if (message[i] >= F.q()) fail(Errc::BadCoefficients, "message digit out of range");
        if (message[i] == 0) continue;
        for (int j = 0; j < n(); ++j)
            out[j] = F.addv(out[j], F.mulv(message[i], gen.at(i, j)));
    }
    return out;
}

CodewordTable::CodewordTable(const LinearCode& C, uint64_t codeword_budget) {
    const Field& F = C.field();
    k = C.k();
    n = C.n();
    q = F.q();
    uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        if (__builtin_mul_overflow(total, uint64_t(q), &total) || total > codeword_budget)
            fail(Errc::EnumerationBudgetExceeded, "codeword table beyond budget");
    }
    words = (n + 63) / 64;
    masks.assign(total * uint64_t(words), 0);
    weights.assign(total, 0);

    // partial[i] is the codeword of the first i message digits; an odometer
    // step at digit t refreshes levels t..k-1 only
    std::vector<std::vector<uint8_t>> partial(k + 1, std::vector<uint8_t>(n, 0));
    std::vector<uint8_t> dig(k, 0);
    for (uint64_t idx = 0;; ++idx) {
        const std::vector<uint8_t>& cw = partial[k];
        uint64_t* m = masks.data() + idx * uint64_t(words);
        int wt = 0;
        for (int j = 0; j < n; ++j)
            if (cw[j]) {
                m[j >> 6] |= uint64_t(1) << (j & 63);
                ++wt;
            }
        weights[idx] = uint16_t(wt);

        int t = k - 1;
        while (t >= 0 && dig[t] == uint8_t(q - 1)) dig[t--] = 0;
        if (t < 0) break;
        ++dig[t];
        for (int s = t; s < k; ++s) {
            const std::vector<uint8_t>& prev = partial[s];
            std::vector<uint8_t>& cur = partial[s + 1];
            if (dig[s] == 0) {
                cur = prev;
            } else {
                for (int j = 0; j < n; ++j)
                    cur[j] = F.addv(prev[j], F.mulv(dig[s], C.gen.at(s, j)));
            }
        }
    }
}

std::map<int, uint64_t> weight_distribution(const LinearCode& C, const SearchLimits& lim) {
    CodewordTable T(C, lim.codeword_budget);
    std::map<int, uint64_t> out;
    for (uint64_t idx = 0; idx < T.size(); ++idx) ++out[T.weight(idx)];
    return out;
}

int min_distance(const LinearCode& C, const SearchLimits& lim) {
    CodewordTable T(C, lim.codeword_budget);
    int best = C.n() + 1;
    for (uint64_t idx = 1; idx < T.size(); ++idx) best = std::min(best, T.weight(idx));
    return best;
}

int second_weight(const LinearCode& C, const SearchLimits& lim) {
    CodewordTable T(C, lim.codeword_budget);
    int d = C.n() + 1;
    for (uint64_t idx = 1; idx < T.size(); ++idx) d = std::min(d, T.weight(idx));
    int e = C.n() + 1;
    for (uint64_t idx = 1; idx < T.size(); ++idx)
        if (T.weight(idx) > d) e = std::min(e, T.weight(idx));
    return e <= C.n() ? e : d;
}

int subcode_norm(const LinearCode& C, const FMatrix& messages) {
    if (messages.cols != C.k()) fail(Errc::AmbientMismatch, "message rows are not length k");
    if (!messages.f || !messages.f->same(C.field()))
        fail(Errc::MixedFields, "messages over a different field");
    if (rank_of(messages) != messages.rows)
        fail(Errc::DependentBasis, "messages do not form a basis");
    std::vector<uint8_t> sup(C.n(), 0);
    for (int i = 0; i < messages.rows; ++i) {
        std::vector<uint8_t> cw = C.encode({messages.row(i), messages.row(i) + messages.cols});
        for (int j = 0; j < C.n(); ++j) sup[j] |= cw[j] != 0;
    }
    return int(std::count(sup.begin(), sup.end(), uint8_t(1)));
}

WeightWitness higher_weight(const LinearCode& C, int r, const SearchLimits& lim,
                            SearchSide side) {
    if (r < 1 || r > C.k()) fail(Errc::WrongDegree, "subcode dimension out of range");
    check_search_budget(C.k(), r, C.field().q(), lim);
    if (side == SearchSide::Auto)
        side = r <= C.k() - r ? SearchSide::Primal : SearchSide::Section;
    if (side == SearchSide::Primal) {
        CodewordTable T(C, lim.codeword_budget);
        return primal_weight(C, T, r, lim);
    }
    return section_weight(C, column_multiplicity(C, lim), r, lim);
}

std::vector<WeightWitness> weight_hierarchy(const LinearCode& C, const SearchLimits& lim,
                                            SearchSide side) {
    std::vector<WeightWitness> out;
    std::optional<CodewordTable> T;
    std::vector<uint32_t> colcount;
    for (int r = 1; r <= C.k(); ++r) {
        check_search_budget(C.k(), r, C.field().q(), lim);
        SearchSide s = side;
        if (s == SearchSide::Auto) s = r <= C.k() - r ? SearchSide::Primal : SearchSide::Section;
        if (s == SearchSide::Primal) {
            if (!T) T.emplace(C, lim.codeword_budget);
            out.push_back(primal_weight(C, *T, r, lim));
        } else {
            if (colcount.empty()) colcount = column_multiplicity(C, lim);
            out.push_back(section_weight(C, colcount, r, lim));
        }
    }
    return out;
}

MarkedWitness max_marked_in_subspace(const Field& F, int k, const std::vector<uint8_t>& marked,
                                     int r, const SearchLimits& lim) {
    uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        if (__builtin_mul_overflow(total, uint64_t(F.q()), &total) ||
            total > lim.codeword_budget)
            fail(Errc::EnumerationBudgetExceeded, "marked table beyond budget");
    }
    if (marked.size() != total) fail(Errc::AmbientMismatch, "marked table has wrong size");
    if (r < 0 || r > k) fail(Errc::WrongDegree, "subspace dimension out of range");
    check_search_budget(k, r, F.q(), lim);

    std::vector<uint32_t> table(marked.begin(), marked.end());
    table[0] = 0;
    MaxSumResult res = max_sum_search(table, F, k, r, lim.workers);
    MarkedWitness w{res.best, rows_to_matrix(F, res.rows, k), res.visited};

    // recount the witness by direct span enumeration
    uint64_t check = 0;
    std::vector<uint8_t> c(size_t(r), 0), v(size_t(k), 0);
    while (r > 0) {
        size_t i = 0;
        while (i < c.size() && c[i] == uint8_t(F.q() - 1)) c[i++] = 0;
        if (i == c.size()) break;
        ++c[i];
        std::fill(v.begin(), v.end(), 0);
        for (int row = 0; row < r; ++row)
            for (int t = 0; t < k; ++t)
                v[t] = F.addv(v[t], F.mulv(c[row], w.messages.at(row, t)));
        uint64_t idx = 0;
        for (int t = 0; t < k; ++t) idx = idx * uint64_t(F.q()) + v[t];
        check += marked[idx] != 0;
    }
    if (r > 0 && check != w.count)
        throw std::logic_error("marked search witness fails to reproduce its count");
    return w;
}

uint64_t generalized_bound(uint64_t d, uint64_t e, uint64_t delta, int q, int r) {
    if (q < 2 || r < 1) fail(Errc::BadFormat, "need q >= 2 and r >= 1");
    uint64_t qr = 1;
    for (int i = 0; i < r; ++i)
        if (__builtin_mul_overflow(qr, uint64_t(q), &qr))
            fail(Errc::Overflow, "q^r exceeds 64 bits");
    if (delta > qr - 1) fail(Errc::InvalidDelta, "delta exceeds the number of nonzero elements");
    unsigned __int128 num = (unsigned __int128)d * delta + (unsigned __int128)e * (qr - 1 - delta);
    uint64_t den = qr - qr / uint64_t(q);
    unsigned __int128 bound = (num + den - 1) / den;
    if (bound > ~uint64_t(0)) fail(Errc::Overflow, "bound exceeds 64 bits");
    return uint64_t(bound);
}

uint64_t griesmer_wei_bound(uint64_t d, int q, int r) {
    if (q < 2 || r < 1) fail(Errc::BadFormat, "need q >= 2 and r >= 1");
    uint64_t sum = 0, pw = 1;
    for (int j = 0; j < r; ++j) {
        uint64_t term = (d + pw - 1) / pw;
        if (__builtin_add_overflow(sum, term, &sum)) fail(Errc::Overflow, "bound exceeds 64 bits");
        if (pw <= d) pw *= uint64_t(q); // once past d every term is 1
    }
    return sum;
}

FieldElement parse_field_entry(const Field& F, std::istream& in) {
    std::string tok;
    if (!(in >> tok)) fail(Errc::BadFormat, "generator matrix is truncated");
    if (tok.front() != '[') {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            fail(Errc::BadFormat, "bad matrix entry '" + tok + "'");
        }
        if (used != tok.size()) fail(Errc::BadFormat, "bad matrix entry '" + tok + "'");
        if (F.e() == 1) return F.element(v);
        // extension fields take plain integers as prime-subfield constants
        if (v < 0 || v >= F.p()) fail(Errc::BadFormat, "bare entry out of the prime subfield");
        return F.from_coeffs({v});
    }
    while (tok.back() != ']') {
        std::string more;
        if (!(in >> more)) fail(Errc::BadFormat, "unterminated coefficient list");
        tok += more;
    }
    std::vector<int> coeffs;
    std::string body = tok.substr(1, tok.size() - 2);
    std::stringstream ss(body);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            size_t used = 0;
            int c = std::stoi(piece, &used);
            if (used != piece.size() || c < 0 || c >= F.p())
                fail(Errc::BadFormat, "coefficient out of range in '" + tok + "'");
            coeffs.push_back(c);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail(Errc::BadFormat, "bad coefficient list '" + tok + "'");
        }
    }
    if (int(coeffs.size()) != F.e()) fail(Errc::BadFormat, "coefficient list of wrong length");
    return F.from_coeffs(coeffs);
}

LinearCode read_generator(std::istream& in) {
    long long n = 0, k = 0, q = 0;
    if (!(in >> n >> k >> q)) fail(Errc::BadFormat, "expected a 'n k q' header");
    if (n < 1 || k < 1 || q < 2 || n > 65535 || k > 64)
        fail(Errc::BadFormat, "header out of range");
    int p = 2;
    while (q % p != 0) {
        ++p;
        if (p > q) fail(Errc::BadFormat, "q is not a prime power");
    }
    int e = 0;
    long long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) fail(Errc::BadFormat, "q is not a prime power");
    const Field& F = cached_field(p, e);
    FMatrix G(F, int(k), int(n));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) G.set(i, j, parse_field_entry(F, in));
    return LinearCode::from_generator(std::move(G));
}

void write_generator(std::ostream& out, const LinearCode& C) {
    const Field& F = C.field();
    out << C.n() << ' ' << C.k() << ' ' << F.q() << '\n';
    for (int i = 0; i < C.k(); ++i) {
        for (int j = 0; j < C.n(); ++j) {
            if (j) out << ' ';
            if (F.e() == 1) {
                out << int(C.gen.at(i, j));
            } else {
                std::vector<int> c = C.gen.elem(i, j).coeffs();
                out << '[';
                for (size_t t = 0; t < c.size(); ++t) out << (t ? "," : "") << c[t];
                out << ']';
            }
        }
        out << '\n';
    }
}

} // namespace grasswt
