#include "grasswt/subspace_search.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace grasswt {

namespace {

// Lex enumeration of r-subsets of {0..k-1}.
struct PivotCombos {
    int k, r;
    std::vector<int> piv;
    PivotCombos(int k, int r) : k(k), r(r), piv(r) {
        for (int i = 0; i < r; ++i) piv[i] = i;
    }
    bool next() {
        int i = r - 1;
        while (i >= 0 && piv[i] == k - r + i) --i;
        if (i < 0) return false;
        ++piv[i];
        for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
        return true;
    }
};

struct PatternShape {
    std::vector<uint64_t> base;          // packed row with just the pivot set
    std::vector<std::vector<int>> fcol;  // free columns per row

    void build(const std::vector<int>& piv, int k, int q, int one_rank,
               const std::vector<uint64_t>& place) {
        int r = int(piv.size());
        base.assign(r, 0);
        fcol.assign(r, {});
        std::vector<char> is_piv(k, 0);
        for (int p : piv) is_piv[p] = 1;
        for (int i = 0; i < r; ++i) {
            base[i] = place[piv[i]] * uint64_t(one_rank);
            for (int j = piv[i] + 1; j < k; ++j)
                if (!is_piv[j]) fcol[i].push_back(j);
        }
    }
};

std::vector<uint64_t> make_places(int k, int q) {
    std::vector<uint64_t> place(k, 1);
    for (int j = k - 2; j >= 0; --j) place[j] = place[j + 1] * uint64_t(q);
    return place;
}

struct MinOrWorker {
    const uint64_t* masks;
    int words, k, q, one, r, me, step;

    int best = std::numeric_limits<int>::max();
    uint64_t best_pattern = ~uint64_t(0);
    std::vector<uint64_t> best_rows;
    uint64_t visited = 0;

    std::vector<uint64_t> place;
    PatternShape shape;
    std::vector<uint64_t> pref;              // (r+1) x words prefix ORs
    std::vector<uint64_t> rows;
    std::vector<std::vector<uint8_t>> digits;
    uint64_t cur_pattern = 0;

    void run() {
        place = make_places(k, q);
        pref.assign(size_t(r + 1) * words, 0);
        rows.assign(r, 0);
        digits.assign(r, {});
        PivotCombos combos(k, r);
        do {
            if (cur_pattern % uint64_t(step) == uint64_t(me)) {
                shape.build(combos.piv, k, q, one, place);
                rec(0);
            }
            ++cur_pattern;
        } while (combos.next());
    }

    void rec(int i) {
        const std::vector<int>& fc = shape.fcol[i];
        std::vector<uint8_t>& dig = digits[i];
        dig.assign(fc.size(), 0);
        uint64_t idx = shape.base[i];
        const uint64_t* pp = pref.data() + size_t(i) * words;
        uint64_t* np = pref.data() + size_t(i + 1) * words;
        while (true) {
            const uint64_t* m = masks + idx * words;
            int pc = 0;
            for (int w = 0; w < words; ++w) {
                np[w] = pp[w] | m[w];
                pc += __builtin_popcountll(np[w]);
            }
            if (i == r - 1) ++visited;
            // the OR only grows with more rows, so >= best cannot improve
            if (pc < best) {
                rows[i] = idx;
                if (i == r - 1) {
                    best = pc;
                    best_pattern = cur_pattern;
                    best_rows = rows;
                } else {
                    rec(i + 1);
                }
            }
            size_t t = fc.size();
            while (t > 0 && dig[t - 1] == uint8_t(q - 1)) {
                dig[t - 1] = 0;
                idx -= uint64_t(q - 1) * place[fc[t - 1]];
                --t;
            }
            if (t == 0) break;
            ++dig[t - 1];
            idx += place[fc[t - 1]];
        }
    }
};

struct MaxSumWorker {
    const uint32_t* table;
    const Field* F;
    int k, q, p, one, r, me, step;
    uint32_t tmax;
    uint64_t qr;

    int64_t best = -1;
    uint64_t best_pattern = ~uint64_t(0);
    std::vector<uint64_t> best_rows;
    uint64_t visited = 0;

    std::vector<uint64_t> place;
    PatternShape shape;
    std::vector<std::vector<uint64_t>> elems; // elems[i]: combos of rows < i
    std::vector<uint64_t> cnt;
    std::vector<uint64_t> rows;
    std::vector<std::vector<uint8_t>> digits;
    uint64_t cur_pattern = 0;

    uint64_t padd(uint64_t a, uint64_t b) const {
        if (p == 2) return a ^ b;
        uint64_t out = 0, pl = 1;
        while (a || b) {
            out += pl * uint64_t((a % p + b % p) % p);
            a /= uint64_t(p);
            b /= uint64_t(p);
            pl *= uint64_t(p);
        }
        return out;
    }

    uint64_t scale_packed(uint64_t v, uint8_t s) const {
        if (s == uint8_t(one)) return v;
        uint64_t out = 0, pl = 1;
        while (v) {
            out += pl * uint64_t(F->mulv(uint8_t(v % q), s));
            v /= uint64_t(q);
            pl *= uint64_t(q);
        }
        return out;
    }

    void run() {
        place = make_places(k, q);
        qr = 1;
        for (int i = 0; i < r; ++i) qr *= uint64_t(q);
        elems.assign(r + 1, {});
        uint64_t sz = 1;
        for (int i = 0; i <= r; ++i) {
            elems[i].assign(sz, 0);
            sz *= uint64_t(q);
        }
        cnt.assign(r + 1, 0);
        cnt[0] = table[0];
        rows.assign(r, 0);
        digits.assign(r, {});
        PivotCombos combos(k, r);
        do {
            if (cur_pattern % uint64_t(step) == uint64_t(me)) {
                shape.build(combos.piv, k, q, one, place);
                rec(0);
            }
            ++cur_pattern;
        } while (combos.next());
    }

    void rec(int i) {
        const uint64_t done = elems[i].size(); // q^i
        // no assignment of the remaining rows can beat the incumbent
        if (int64_t(cnt[i] + uint64_t(tmax) * (qr - done)) <= best) return;
        const std::vector<int>& fc = shape.fcol[i];
        std::vector<uint8_t>& dig = digits[i];
        dig.assign(fc.size(), 0);
        uint64_t idx = shape.base[i];
        const std::vector<uint64_t>& src = elems[i];
        std::vector<uint64_t>& dst = elems[i + 1];
        while (true) {
            std::copy(src.begin(), src.end(), dst.begin());
            uint64_t c = cnt[i];
            for (int s = 1; s < q; ++s) {
                uint64_t sv = scale_packed(idx, uint8_t(s));
                uint64_t* out = dst.data() + uint64_t(s) * done;
                if (p == 2) {
                    for (uint64_t e = 0; e < done; ++e) {
                        uint64_t v = src[e] ^ sv;
                        out[e] = v;
                        c += table[v];
                    }
                } else {
                    for (uint64_t e = 0; e < done; ++e) {
                        uint64_t v = padd(src[e], sv);
                        out[e] = v;
                        c += table[v];
                    }
                }
            }
            cnt[i + 1] = c;
            if (i == r - 1) ++visited;
            if (int64_t(c + uint64_t(tmax) * (qr - done * uint64_t(q))) > best) {
                rows[i] = idx;
                if (i == r - 1) {
                    best = int64_t(c);
                    best_pattern = cur_pattern;
                    best_rows = rows;
                } else {
                    rec(i + 1);
                }
            }
            size_t t = fc.size();
            while (t > 0 && dig[t - 1] == uint8_t(q - 1)) {
                dig[t - 1] = 0;
                idx -= uint64_t(q - 1) * place[fc[t - 1]];
                --t;
            }
            if (t == 0) break;
            ++dig[t - 1];
            idx += place[fc[t - 1]];
        }
    }
};

} // namespace

MinOrResult min_or_search(const uint64_t* masks, int words, int k, int q, int one_rank, int r,
                          int workers) {
    MinOrResult res;
    if (r < 0 || r > k) return res;
    if (r == 0) {
        res.best = 0;
        res.visited = 1;
        return res;
    }
    workers = std::max(1, workers);
    std::vector<MinOrWorker> ws(workers);
    for (int w = 0; w < workers; ++w)
        ws[w] = MinOrWorker{masks, words, k, q, one_rank, r, w, workers};
    if (workers == 1) {
        ws[0].run();
    } else {
        std::vector<std::thread> threads;
        for (auto& w : ws) threads.emplace_back([&w] { w.run(); });
        for (auto& t : threads) t.join();
    }
    const MinOrWorker* pick = nullptr;
    for (const auto& w : ws) {
        res.visited += w.visited;
        if (w.best_rows.empty()) continue;
        if (!pick || w.best < pick->best ||
            (w.best == pick->best && w.best_pattern < pick->best_pattern))
            pick = &w;
    }
    if (pick) {
        res.best = pick->best;
        res.rows = pick->best_rows;
    }
    return res;
}

MaxSumResult max_sum_search(const std::vector<uint32_t>& table, const Field& F, int k, int r,
                            int workers) {
    MaxSumResult res;
    if (r < 0 || r > k) return res;
    if (r == 0) {
        res.best = table.empty() ? 0 : table[0];
        res.visited = 1;
        return res;
    }
    workers = std::max(1, workers);
    uint32_t tmax = *std::max_element(table.begin(), table.end());
    std::vector<MaxSumWorker> ws(workers);
    for (int w = 0; w < workers; ++w)
        ws[w] = MaxSumWorker{table.data(), &F,      k, F.q(), F.p(), int(F.onev()),
                             r,            w,       workers, tmax};
    if (workers == 1) {
        ws[0].run();
    } else {
        std::vector<std::thread> threads;
        for (auto& w : ws) threads.emplace_back([&w] { w.run(); });
        for (auto& t : threads) t.join();
    }
    const MaxSumWorker* pick = nullptr;
    for (const auto& w : ws) {
        res.visited += w.visited;
        if (w.best < 0) continue;
        if (!pick || w.best > pick->best ||
            (w.best == pick->best && w.best_pattern < pick->best_pattern))
            pick = &w;
    }
    if (pick) {
        res.best = uint64_t(pick->best);
        res.rows = pick->best_rows;
    }
    return res;
}

} // namespace grasswt
