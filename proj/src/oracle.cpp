#include "vsym/oracle.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "vsym/symbol.hpp"

namespace vsym {

namespace {

// Exact residue arithmetic tables derived from the ring operations.
struct Tables {
    size_t n;
    std::vector<uint8_t> add, mul, neg;
    std::vector<RingElement> elems;

    explicit Tables(const Ring& R) : n(R->size().get_ui()) {
        if (n > 255) throw domain_error("oracle tables require |R| <= 255");
        for (size_t i = 0; i < n; ++i) elems.push_back(R->element_at(static_cast<long>(i)));
        add.resize(n * n);
        mul.resize(n * n);
        neg.resize(n);
        for (size_t i = 0; i < n; ++i) {
            neg[i] = static_cast<uint8_t>((-elems[i]).as_mpz().get_ui());
            for (size_t j = 0; j < n; ++j) {
                add[i * n + j] = static_cast<uint8_t>((elems[i] + elems[j]).as_mpz().get_ui());
                mul[i * n + j] = static_cast<uint8_t>((elems[i] * elems[j]).as_mpz().get_ui());
            }
        }
    }
    uint8_t a(uint8_t x, uint8_t y) const { return add[x * n + y]; }
    uint8_t m(uint8_t x, uint8_t y) const { return mul[x * n + y]; }
};

void check_oracle_ring(const Ring& ring, size_t size_bound) {
    if (!ring->finite()) throw domain_error("oracle requires a finite ring");
    if (ring->size() > static_cast<long>(size_bound))
        throw domain_error("ring size exceeds the oracle bound " + std::to_string(size_bound));
    if (!ring->two_is_unit()) throw domain_error("oracle requires 2 to be a unit");
}

// ---- Um3 ------------------------------------------------------------------

struct Um3Space {
    const Tables& t;
    size_t n;
    explicit Um3Space(const Tables& tables) : t(tables), n(tables.n) {}

    uint32_t encode(uint8_t a, uint8_t b, uint8_t c) const {
        return static_cast<uint32_t>((a * n + b) * n + c);
    }
    std::array<uint8_t, 3> decode(uint32_t id) const {
        uint8_t c = static_cast<uint8_t>(id % n);
        id /= n;
        uint8_t b = static_cast<uint8_t>(id % n);
        return {static_cast<uint8_t>(id / n), b, c};
    }
    size_t total() const { return n * n * n; }

    bool unimodular(uint32_t id, const Ring& R) const {
        auto row = decode(id);
        try {
            bezout_witness(std::vector<RingElement>{t.elems[row[0]], t.elems[row[1]],
                                                    t.elems[row[2]]});
            return true;
        } catch (const not_unimodular&) {
            return false;
        }
    }

    // right multiplication by I + lambda E_{ij}: entry j += lambda * entry i
    uint32_t apply(uint32_t id, size_t i, size_t j, uint8_t lambda) const {
        auto row = decode(id);
        row[j] = t.a(row[j], t.m(lambda, row[i]));
        return encode(row[0], row[1], row[2]);
    }

    std::string canon(uint32_t id) const {
        auto row = decode(id);
        std::ostringstream os;
        os << "(" << t.elems[row[0]].text() << "," << t.elems[row[1]].text() << ","
           << t.elems[row[2]].text() << ")";
        return os.str();
    }
};

// ---- A4 -------------------------------------------------------------------

// Skew 4x4 matrices keyed by the big-endian tuple (m01,m02,m03,m12,m13,m23).
struct A4Space {
    const Tables& t;
    size_t n;
    explicit A4Space(const Tables& tables) : t(tables), n(tables.n) {}

    size_t total() const {
        size_t s = 1;
        for (int i = 0; i < 6; ++i) s *= n;
        return s;
    }
    uint32_t encode(const std::array<uint8_t, 6>& e) const {
        uint32_t id = 0;
        for (int i = 0; i < 6; ++i) id = static_cast<uint32_t>(id * n + e[i]);
        return id;
    }
    std::array<uint8_t, 6> decode(uint32_t id) const {
        std::array<uint8_t, 6> e{};
        for (int i = 5; i >= 0; --i) {
            e[i] = static_cast<uint8_t>(id % n);
            id /= n;
        }
        return e;
    }

    // dense 4x4 from the upper triangle
    std::array<uint8_t, 16> dense(const std::array<uint8_t, 6>& e) const {
        std::array<uint8_t, 16> m{};
        static constexpr int pos[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        for (int k = 0; k < 6; ++k) {
            m[pos[k][0] * 4 + pos[k][1]] = e[k];
            m[pos[k][1] * 4 + pos[k][0]] = t.neg[e[k]];
        }
        return m;
    }
    std::array<uint8_t, 6> triangle(const std::array<uint8_t, 16>& m) const {
        return {m[0 * 4 + 1], m[0 * 4 + 2], m[0 * 4 + 3], m[1 * 4 + 2], m[1 * 4 + 3], m[2 * 4 + 3]};
    }

    uint8_t pf(const std::array<uint8_t, 6>& e) const {
        // m01 m23 - m02 m13 + m03 m12
        uint8_t v = t.m(e[0], e[5]);
        v = t.a(v, t.neg[t.m(e[1], e[4])]);
        return t.a(v, t.m(e[2], e[3]));
    }

    // congruence by the transvection I + lambda E_{ij}
    uint32_t apply(uint32_t id, size_t i, size_t j, uint8_t lambda) const {
        auto m = dense(decode(id));
        std::array<uint8_t, 16> a = m;
        // column op: col_j += lambda col_i ; then row op: row_j += lambda row_i
        for (int r = 0; r < 4; ++r) a[r * 4 + j] = t.a(a[r * 4 + j], t.m(lambda, a[r * 4 + i]));
        for (int c = 0; c < 4; ++c) a[j * 4 + c] = t.a(a[j * 4 + c], t.m(lambda, a[i * 4 + c]));
        return encode(triangle(a));
    }

    std::string canon(uint32_t id) const {
        auto e = decode(id);
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < 6; ++i) os << (i ? "," : "") << t.elems[e[i]].text();
        os << "]";
        return os.str();
    }

    Matrix to_matrix(const Ring& R, uint32_t id) const {
        auto e = decode(id);
        Matrix m(R, 4, 4);
        static constexpr int pos[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        for (int k = 0; k < 6; ++k) {
            m.set(pos[k][0], pos[k][1], t.elems[e[k]]);
            m.set(pos[k][1], pos[k][0], -t.elems[e[k]]);
        }
        return m;
    }
    uint32_t from_matrix(const Matrix& m) const {
        std::array<uint8_t, 6> e;
        static constexpr int pos[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        for (int k = 0; k < 6; ++k)
            e[k] = static_cast<uint8_t>(m.at(pos[k][0], pos[k][1]).as_mpz().get_ui());
        return encode(e);
    }
};

// Generic BFS orbit closure over an encoded universe.
template <typename Space>
void bfs_orbits(const Space& sp, const std::vector<char>& in_universe,
                const std::vector<std::pair<std::pair<size_t, size_t>, uint8_t>>& gens,
                OrbitPartition& out) {
    size_t total = in_universe.size();
    out.orbit_of.assign(total, -1);
    std::deque<uint32_t> queue;
    for (uint32_t seed = 0; seed < total; ++seed) {
        if (!in_universe[seed] || out.orbit_of[seed] >= 0) continue;
        int32_t orbit = static_cast<int32_t>(out.orbit_reps.size());
        out.orbit_reps.push_back(seed);
        out.orbit_of[seed] = orbit;
        queue.push_back(seed);
        while (!queue.empty()) {
            uint32_t cur = queue.front();
            queue.pop_front();
            for (const auto& g : gens) {
                uint32_t next = sp.apply(cur, g.first.first, g.first.second, g.second);
                ++out.bfs_edges;
                if (out.orbit_of[next] < 0) {
                    out.orbit_of[next] = orbit;
                    queue.push_back(next);
                } else if (out.orbit_of[next] != orbit) {
                    throw verify_error("internal: BFS reached an element of another orbit");
                }
            }
        }
    }
    // exhaustive closure check: every generator maps every orbit into itself
    for (uint32_t id = 0; id < total; ++id) {
        if (!in_universe[id]) continue;
        for (const auto& g : gens) {
            uint32_t next = sp.apply(id, g.first.first, g.first.second, g.second);
            if (out.orbit_of[next] != out.orbit_of[id])
                throw verify_error("internal: orbit is not closed under a generator");
        }
    }
    out.orbits.assign(out.orbit_reps.size(), {});
    for (uint32_t id = 0; id < total; ++id)
        if (in_universe[id]) out.orbits[out.orbit_of[id]].push_back(sp.canon(id));
}

}  // namespace

OrbitPartition orbits_um3(const Ring& ring, size_t size_bound) {
    check_oracle_ring(ring, size_bound);
    Tables t(ring);
    Um3Space sp(t);

    OrbitPartition out;
    out.ring = ring;
    out.universe = "Um3";

    std::vector<char> universe(sp.total(), 0);
    for (uint32_t id = 0; id < sp.total(); ++id)
        if (sp.unimodular(id, ring)) {
            universe[id] = 1;
            ++out.universe_size;
        }

    std::vector<std::pair<std::pair<size_t, size_t>, uint8_t>> gens;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            for (size_t l = 1; l < t.n; ++l)
                gens.push_back({{i, j}, static_cast<uint8_t>(l)});
        }
    out.generator_count = gens.size();
    bfs_orbits(sp, universe, gens, out);
    return out;
}

OrbitPartition orbits_a4(const Ring& ring, size_t stab_levels, size_t size_bound,
                         size_t stab_node_cap) {
    check_oracle_ring(ring, size_bound);
    if (stab_levels > 1) throw domain_error("stabilization depth is capped at one psi_2 level");
    Tables t(ring);
    A4Space sp(t);

    OrbitPartition out;
    out.ring = ring;
    out.universe = "A4";
    out.stab_levels = stab_levels;

    std::vector<char> universe(sp.total(), 0);
    for (uint32_t id = 0; id < sp.total(); ++id)
        if (sp.pf(sp.decode(id)) == 1) {
            universe[id] = 1;
            ++out.universe_size;
        }

    std::vector<std::pair<std::pair<size_t, size_t>, uint8_t>> gens;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            if (i == j) continue;
            for (size_t l = 1; l < t.n; ++l)
                gens.push_back({{i, j}, static_cast<uint8_t>(l)});
        }
    out.generator_count = gens.size();
    bfs_orbits(sp, universe, gens, out);

    if (stab_levels == 1 && out.orbit_reps.size() > 1) {
        // Bounded BFS at size 6: explore the congruence orbit of rep + psi_2
        // and record which other representatives it reaches.
        auto key6 = [&](const std::array<uint8_t, 36>& m) {
            uint64_t k = 0;
            for (size_t i = 0; i < 6; ++i)
                for (size_t j = i + 1; j < 6; ++j) k = k * t.n + m[i * 6 + j];
            return k;
        };
        auto stab6 = [&](uint32_t rep) {
            auto d4 = sp.dense(sp.decode(rep));
            std::array<uint8_t, 36> m{};
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = 0; j < 4; ++j) m[i * 6 + j] = d4[i * 4 + j];
            m[4 * 6 + 5] = 1;
            m[5 * 6 + 4] = t.neg[1];
            return m;
        };
        std::vector<size_t> merged(out.orbit_reps.size());
        for (size_t i = 0; i < merged.size(); ++i) merged[i] = i;
        auto find = [&](size_t x) {
            while (merged[x] != x) x = merged[x] = merged[merged[x]];
            return x;
        };

        std::unordered_map<uint64_t, size_t> rep_keys;
        for (size_t r = 0; r < out.orbit_reps.size(); ++r)
            rep_keys[key6(stab6(out.orbit_reps[r]))] = r;

        for (size_t r = 0; r < out.orbit_reps.size(); ++r) {
            std::unordered_set<uint64_t> seen;
            std::deque<std::array<uint8_t, 36>> queue{stab6(out.orbit_reps[r])};
            seen.insert(key6(queue.front()));
            while (!queue.empty() && seen.size() < stab_node_cap) {
                auto cur = queue.front();
                queue.pop_front();
                for (size_t i = 0; i < 6; ++i) {
                    for (size_t j = 0; j < 6; ++j) {
                        if (i == j) continue;
                        for (size_t l = 1; l < t.n; ++l) {
                            auto nxt = cur;
                            for (size_t row = 0; row < 6; ++row)
                                nxt[row * 6 + j] =
                                    t.a(nxt[row * 6 + j], t.m(static_cast<uint8_t>(l), nxt[row * 6 + i]));
                            for (size_t col = 0; col < 6; ++col)
                                nxt[j * 6 + col] =
                                    t.a(nxt[j * 6 + col], t.m(static_cast<uint8_t>(l), nxt[i * 6 + col]));
                            uint64_t k = key6(nxt);
                            if (seen.insert(k).second) {
                                auto hit = rep_keys.find(k);
                                if (hit != rep_keys.end()) merged[find(hit->second)] = find(r);
                                queue.push_back(nxt);
                            }
                        }
                    }
                }
            }
            if (!queue.empty()) out.stab_merge_complete = false;
        }

        // rebuild orbits under the union-find merge
        std::vector<int32_t> orbit_map(out.orbit_reps.size());
        std::vector<uint32_t> new_reps;
        std::vector<std::vector<std::string>> new_orbits;
        for (size_t r = 0; r < out.orbit_reps.size(); ++r) {
            size_t root = find(r);
            if (root == r) {
                orbit_map[r] = static_cast<int32_t>(new_reps.size());
                new_reps.push_back(out.orbit_reps[r]);
                new_orbits.emplace_back();
            }
        }
        for (size_t r = 0; r < out.orbit_reps.size(); ++r) orbit_map[r] = orbit_map[find(r)];
        for (uint32_t id = 0; id < sp.total(); ++id) {
            if (!universe[id]) continue;
            out.orbit_of[id] = orbit_map[out.orbit_of[id]];
            new_orbits[out.orbit_of[id]].push_back(sp.canon(id));
        }
        out.orbit_reps = std::move(new_reps);
        out.orbits = std::move(new_orbits);
    }

    // Pfaffian is a congruence invariant: constant on every orbit by
    // construction of the universe (all elements have Pfaffian 1).
    return out;
}

SymbolMapReport symbol_map_report(const Ring& ring, size_t size_bound) {
    SymbolMapReport rep;
    rep.ring = ring;
    rep.rows = orbits_um3(ring, size_bound);
    rep.classes = orbits_a4(ring, 0, size_bound);

    Tables t(ring);
    Um3Space rows(t);
    A4Space a4(t);

    auto symbol_class = [&](uint32_t row_id) {
        auto r = rows.decode(row_id);
        Matrix a(ring, 1, 3);
        a.set(0, 0, t.elems[r[0]]);
        a.set(0, 1, t.elems[r[1]]);
        a.set(0, 2, t.elems[r[2]]);
        auto b = bezout_witness({t.elems[r[0]], t.elems[r[1]], t.elems[r[2]]});
        Matrix v = classical_vaserstein(a, col_vector(ring, b));
        return rep.classes.orbit_of[a4.from_matrix(v)];
    };

    for (uint32_t r : rep.rows.orbit_reps)
        rep.class_of_orbit.push_back(static_cast<size_t>(symbol_class(r)));

    // well-definedness on every member for small rings
    if (ring->size() <= 5) {
        rep.well_defined_exhaustive = true;
        for (uint32_t id = 0; id < rows.total(); ++id) {
            if (rep.rows.orbit_of[id] < 0) continue;
            if (static_cast<size_t>(symbol_class(id)) !=
                rep.class_of_orbit[rep.rows.orbit_of[id]])
                throw verify_error("symbol map is not constant on a row orbit");
        }
    }

    std::vector<char> hit(rep.classes.orbit_reps.size(), 0);
    bool inj = true;
    for (size_t c : rep.class_of_orbit) {
        if (hit[c]) inj = false;
        hit[c] = 1;
    }
    rep.injective = inj;
    rep.surjective = true;
    for (char h : hit)
        if (!h) rep.surjective = false;
    return rep;
}

std::string SymbolMapReport::text() const {
    std::ostringstream os;
    os << "symbol map report\n";
    os << "ring " << ring->text() << "\n";
    os << "row universe " << rows.universe_size << "\n";
    os << "row orbits " << rows.orbits.size() << "\n";
    for (size_t i = 0; i < rows.orbits.size(); ++i)
        os << "  orbit " << i << " size " << rows.orbits[i].size() << " min "
           << rows.orbits[i].front() << "\n";
    os << "pf1 universe " << classes.universe_size << "\n";
    os << "pf1 classes " << classes.orbits.size() << "\n";
    for (size_t i = 0; i < classes.orbits.size(); ++i)
        os << "  class " << i << " size " << classes.orbits[i].size() << " min "
           << classes.orbits[i].front() << "\n";
    os << "map";
    for (size_t i = 0; i < class_of_orbit.size(); ++i)
        os << " " << i << "->" << class_of_orbit[i];
    os << "\n";
    os << "well-defined " << (well_defined_exhaustive ? "checked-exhaustively" : "on-representatives")
       << "\n";
    os << "injective " << (injective ? "yes" : "no") << "\n";
    os << "surjective " << (surjective ? "yes" : "no") << "\n";
    os << "bijective " << (injective && surjective ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace vsym
