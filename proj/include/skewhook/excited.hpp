#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "skewhook/matrix.hpp"
#include "skewhook/partition.hpp"
#include "skewhook/qpoly.hpp"
#include "skewhook/rational.hpp"

namespace skewhook {

enum class ExcitedVariant { SE, NE };

// a diagram is a sorted cell set; |cells| = |inner|
using CellSet = std::vector<Cell>;

struct ExcitedDiagram {
    SkewShape shape;
    CellSet cells;
};

inline CellSet excited_seed(const SkewShape& sh, ExcitedVariant v) {
    const Partition& mu = sh.inner();
    CellSet out;
    if (v == ExcitedVariant::SE) {
        for (long i = 1; i <= mu.length(); ++i)
            for (long j = 1; j <= mu.part(i); ++j) out.push_back({i, j});
    } else {
        // rows of mu reversed and bottom-justified in the rows of outer
        long d = sh.outer().length(), l = mu.length();
        for (long k = 1; k <= l; ++k) {
            long row = d - l + k, len = mu.part(l - k + 1);
            if (row < 1 || sh.outer().part(row) < len)
                throw std::domain_error("excited_seed: reversed inner does not fit");
            for (long j = 1; j <= len; ++j) out.push_back({row, j});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<CellSet> enumerate_excited(const SkewShape& sh,
                                              ExcitedVariant v = ExcitedVariant::SE) {
    const Partition& la = sh.outer();
    CellSet seed = excited_seed(sh, v);
    std::set<CellSet> seen{seed};
    std::queue<CellSet> work;
    work.push(seed);
    while (!work.empty()) {
        CellSet d = work.front();
        work.pop();
        std::set<Cell> in(d.begin(), d.end());
        auto free_cell = [&](long i, long j) {
            return la.contains_cell(i, j) && !in.count({i, j});
        };
        for (size_t k = 0; k < d.size(); ++k) {
            auto [i, j] = d[k];
            bool active = v == ExcitedVariant::SE
                              ? free_cell(i + 1, j) && free_cell(i, j + 1) &&
                                    free_cell(i + 1, j + 1)
                              : free_cell(i - 1, j) && free_cell(i - 1, j + 1) &&
                                    free_cell(i, j + 1);
            if (!active) continue;
            CellSet next = d;
            next[k] = v == ExcitedVariant::SE ? Cell{i + 1, j + 1} : Cell{i - 1, j + 1};
            std::sort(next.begin(), next.end());
            if (seen.insert(next).second) work.push(next);
        }
    }
    return {seen.begin(), seen.end()};
}

inline std::vector<long> excited_flags(const SkewShape& sh) {
    const Partition &la = sh.outer(), &mu = sh.inner();
    std::vector<long> f;
    for (long i = 1; i <= mu.length(); ++i) {
        long r = i;
        while (la.contains_cell(r + 1, mu.part(i) + r + 1 - i)) ++r;
        f.push_back(r);
    }
    return f;
}

inline bool is_excited(const SkewShape& sh, CellSet cells,
                       ExcitedVariant v = ExcitedVariant::SE) {
    const Partition& la = sh.outer();
    std::sort(cells.begin(), cells.end());
    if (cells.size() != static_cast<size_t>(sh.inner().size())) return false;
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) return false;
    for (const Cell& c : cells)
        if (!la.contains_cell(c.i, c.j)) return false;

    // greedily undo moves; the result is seed-or-bust regardless of order
    std::set<Cell> in(cells.begin(), cells.end());
    auto free_cell = [&](long i, long j) {
        return la.contains_cell(i, j) && !in.count({i, j});
    };
    bool moved = true;
    while (moved) {
        moved = false;
        for (const Cell& c : in) {
            auto [r, s] = c;
            bool active = v == ExcitedVariant::SE
                              ? free_cell(r - 1, s - 1) && free_cell(r - 1, s) &&
                                    free_cell(r, s - 1)
                              : free_cell(r + 1, s - 1) && free_cell(r + 1, s) &&
                                    free_cell(r, s - 1);
            if (!active) continue;
            in.erase(c);
            in.insert(v == ExcitedVariant::SE ? Cell{r - 1, s - 1} : Cell{r + 1, s - 1});
            moved = true;
            break;
        }
    }
    CellSet reduced(in.begin(), in.end());
    return reduced == excited_seed(sh, v);
}

// per-cell diagonal displacements of an SE diagram, indexed by the cells of mu
inline std::vector<std::vector<long>> displacements(const SkewShape& sh,
                                                    const CellSet& cells) {
    const Partition &la = sh.outer(), &mu = sh.inner();
    if (cells.size() != static_cast<size_t>(mu.size()))
        throw std::domain_error("displacements: cell count differs from |inner|");
    std::map<long, std::vector<long>> rows_at;  // content -> sorted rows
    for (const Cell& c : cells) {
        if (!la.contains_cell(c.i, c.j))
            throw std::domain_error("displacements: cell outside outer shape");
        rows_at[content(c)].push_back(c.i);
    }
    for (auto& [c, rows] : rows_at) std::sort(rows.begin(), rows.end());

    std::vector<std::vector<long>> t(mu.length());
    std::map<long, size_t> used;
    for (long i = 1; i <= mu.length(); ++i)
        for (long j = 1; j <= mu.part(i); ++j) {
            long c = j - i;
            auto it = rows_at.find(c);
            size_t k = used[c]++;
            if (it == rows_at.end() || k >= it->second.size())
                throw std::domain_error("displacements: diagonal cell counts differ");
            long shift = it->second[k] - i;
            if (shift < 0) throw std::domain_error("displacements: negative shift");
            t[i - 1].push_back(shift);
        }
    for (auto& [c, rows] : rows_at)
        if (used[c] != rows.size())
            throw std::domain_error("displacements: diagonal cell counts differ");

    for (long i = 0; i < mu.length(); ++i)
        for (size_t j = 0; j < t[i].size(); ++j) {
            if (j + 1 < t[i].size() && t[i][j] > t[i][j + 1])
                throw std::domain_error("displacements: decreasing along a row");
            if (i + 1 < mu.length() && j < t[i + 1].size() && t[i][j] > t[i + 1][j])
                throw std::domain_error("displacements: decreasing down a column");
            long r = i + 1 + t[i][j], s = j + 1 + t[i][j];
            if (!la.contains_cell(r, s))
                throw std::domain_error("displacements: displaced cell leaves shape");
        }
    return t;
}

inline CellSet diagram_from_displacements(const SkewShape& sh,
                                          const std::vector<std::vector<long>>& t) {
    const Partition& mu = sh.inner();
    CellSet out;
    for (long i = 1; i <= mu.length(); ++i)
        for (long j = 1; j <= mu.part(i); ++j)
            out.push_back({i + t[i - 1][j - 1], j + t[i - 1][j - 1]});
    std::sort(out.begin(), out.end());
    return out;
}

enum class CountMethod { enumerate, determinant, hook_content };

inline Int count_excited(const SkewShape& sh, CountMethod m = CountMethod::enumerate) {
    const Partition &la = sh.outer(), &mu = sh.inner();
    switch (m) {
        case CountMethod::enumerate:
            return Int(static_cast<unsigned long>(enumerate_excited(sh).size()));
        case CountMethod::determinant: {
            std::vector<long> f = excited_flags(sh);
            long l = mu.length();
            RationalMatrix a(l, l);
            for (long i = 1; i <= l; ++i)
                for (long j = 1; j <= l; ++j)
                    a.at(i - 1, j - 1) =
                        Rat(binomial(f[i - 1] + mu.part(i) - i + j - 1, f[i - 1] - 1));
            return rat_to_int(det_exact(a), "excited determinant");
        }
        case CountMethod::hook_content: {
            if (!sh.slim()) throw std::domain_error("hook_content needs a slim shape");
            long d = la.length();
            Partition conj = mu.conjugate();
            Rat prod = 1;
            for (long i = 1; i <= mu.length(); ++i)
                for (long j = 1; j <= mu.part(i); ++j) {
                    Rat f(d + j - i, mu.part(i) + conj.part(j) - i - j + 1);
                    f.canonicalize();
                    prod *= f;
                }
            return rat_to_int(prod, "hook content product");
        }
    }
    throw std::logic_error("count_excited: bad method");
}

// the inner rectangle p^k only ever slides against the corner diagonal, so the
// outer shape can be clipped to a rectangle with the same excited diagrams
inline SkewShape reduce_rectangle_inner(const Partition& la, long p, long k) {
    if (p < 1 || k < 1 || la.part(k) < p)
        throw std::domain_error("reduce_rectangle_inner: rectangle not inside shape");
    long l = 0;
    for (long i = 1; i <= la.length(); ++i)
        if (la.part(i) - i >= p - k) l = i;
    return SkewShape(Partition(std::vector<long>(l, p + l - k)),
                     Partition(std::vector<long>(k, p)));
}

struct FlaggedTableau {
    Partition shape;
    std::vector<std::vector<long>> entries;
    std::vector<long> flags;
};

inline FlaggedTableau excited_to_flagged(const SkewShape& sh, const CellSet& cells) {
    std::vector<std::vector<long>> t = displacements(sh, cells);
    FlaggedTableau out{sh.inner(), t, excited_flags(sh)};
    for (size_t i = 0; i < out.entries.size(); ++i)
        for (long& e : out.entries[i]) {
            e += static_cast<long>(i) + 1;
            if (e > out.flags[i])
                throw std::logic_error("excited_to_flagged: flag bound violated");
        }
    return out;
}

inline CellSet flagged_to_excited(const SkewShape& sh, const FlaggedTableau& tab) {
    const Partition& mu = sh.inner();
    if (tab.shape != mu)
        throw std::domain_error("flagged_to_excited: tableau shape differs from inner");
    std::vector<std::vector<long>> t(mu.length());
    for (long i = 1; i <= mu.length(); ++i) {
        if (tab.entries[i - 1].size() != static_cast<size_t>(mu.part(i)))
            throw std::domain_error("flagged_to_excited: ragged tableau row");
        for (long j = 1; j <= mu.part(i); ++j) {
            long e = tab.entries[i - 1][j - 1];
            if (e < i) throw std::domain_error("flagged_to_excited: entry below row index");
            t[i - 1].push_back(e - i);
        }
    }
    CellSet cells = diagram_from_displacements(sh, t);
    displacements(sh, cells);  // validates SSYT conditions and containment
    return cells;
}

struct PathFamily {
    std::vector<std::vector<Cell>> paths;  // each ordered from start to end
};

// unique non-intersecting decomposition of the complement: peel strips that
// start at the southern box of the leftmost remaining column and hug the
// inner boundary (north step whenever available, east otherwise)
inline PathFamily excited_to_paths(const SkewShape& sh, const CellSet& cells) {
    if (!sh.connected())
        throw std::domain_error("excited_to_paths: shape must be connected");
    const Partition& la = sh.outer();
    std::set<Cell> remaining;
    for (const Cell& c : la.cells()) remaining.insert(c);
    for (const Cell& c : cells) remaining.erase(c);

    PathFamily fam;
    while (!remaining.empty()) {
        Cell start = *std::min_element(
            remaining.begin(), remaining.end(), [](const Cell& a, const Cell& b) {
                return a.j != b.j ? a.j < b.j : a.i > b.i;
            });
        std::vector<Cell> path{start};
        remaining.erase(start);
        while (true) {
            Cell north{path.back().i - 1, path.back().j};
            Cell east{path.back().i, path.back().j + 1};
            if (remaining.count(north)) path.push_back(north);
            else if (remaining.count(east))
                path.push_back(east);
            else
                break;
            remaining.erase(path.back());
        }
        fam.paths.push_back(std::move(path));
    }
    return fam;
}

inline CellSet paths_to_excited(const SkewShape& sh, const PathFamily& fam) {
    std::set<Cell> support;
    for (const auto& p : fam.paths) support.insert(p.begin(), p.end());
    CellSet cells;
    for (const Cell& c : sh.outer().cells())
        if (!support.count(c)) cells.push_back(c);
    if (!is_excited(sh, cells))
        throw std::domain_error("paths_to_excited: complement is not an excited diagram");
    return cells;
}

inline Int nhlf_count(const SkewShape& sh) {
    const Partition& la = sh.outer();
    Rat total = 0;
    std::vector<Cell> all = la.cells();
    for (const CellSet& d : enumerate_excited(sh)) {
        std::set<Cell> in(d.begin(), d.end());
        Rat term = 1;
        for (const Cell& c : all)
            if (!in.count(c)) term /= hook_length(la, c.i, c.j);
        total += term;
    }
    return rat_to_int(total * factorial(sh.size()), "hook-length sum");
}

inline QSeries qnhlf_series(const SkewShape& sh, long order) {
    const Partition& la = sh.outer();
    Partition conj = la.conjugate();
    std::vector<Cell> all = la.cells();
    QSeries total(order);
    for (const CellSet& d : enumerate_excited(sh)) {
        std::set<Cell> in(d.begin(), d.end());
        long shift = 0;
        QPolynomial den(1);
        for (const Cell& c : all)
            if (!in.count(c)) {
                shift += conj.part(c.j) - c.i;
                den *= QPolynomial::one_minus_q(hook_length(la, c.i, c.j));
            }
        total += QSeries::ratio(QPolynomial::monomial(Int(1), shift), den, order);
    }
    return total;
}

}  // namespace skewhook
