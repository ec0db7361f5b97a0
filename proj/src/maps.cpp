#include "maps.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "characters.hpp"
#include "embedding.hpp"

namespace ydc {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Side geometry for the polygon family: polygon j has 2*mu_j sides and as
// many corners; side i joins corners i and i+1 (cyclically), so it touches
// one even and one odd corner.
struct Layout {
    int nsides = 0;
    std::vector<int> polygon;       // side -> polygon
    std::vector<int> parity;        // side index parity within its polygon
    std::vector<int> even_corner;   // side -> global id of its even corner
    std::vector<int> odd_corner;    // side -> global id of its odd corner
    int npolygons = 0;

    explicit Layout(const Partition& mu) {
        npolygons = mu.length();
        int offset = 0;
        for (int j = 1; j <= npolygons; ++j) {
            int len = 2 * mu.row(j);
            for (int i = 0; i < len; ++i) {
                polygon.push_back(j - 1);
                parity.push_back(i % 2);
                int even = i % 2 ? (i + 1) % len : i;
                int odd = i % 2 ? i : i + 1;
                even_corner.push_back(offset + even);
                odd_corner.push_back(offset + odd);
            }
            offset += len;
        }
        nsides = offset;
    }
};

// orientation constraints: gluing sides of equal parity twists the surface
bool consistent_orientation(const Layout& lay, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> parent(lay.npolygons), rel(lay.npolygons, 0);
    for (int i = 0; i < lay.npolygons; ++i) parent[i] = i;
    auto find = [&](int a, int& parity_out) {
        int p = 0;
        while (parent[a] != a) p ^= rel[a], a = parent[a];
        parity_out = p;
        return a;
    };
    for (const auto& [s, t] : pairs) {
        int need = 1 ^ lay.parity[s] ^ lay.parity[t];
        int ps = 0, pt = 0;
        int rs = find(lay.polygon[s], ps), rt = find(lay.polygon[t], pt);
        if (rs == rt) {
            if ((ps ^ pt) != need) return false;
        } else {
            parent[rs] = rt;
            rel[rs] = ps ^ pt ^ need;
        }
    }
    return true;
}

GluedMap build_map(const Partition& mu, const Layout& lay,
                   const std::vector<std::pair<int, int>>& pairs) {
    GluedMap m;
    m.face_type = mu;
    m.pairing = pairs;
    m.edge_count = lay.nsides / 2;
    m.face_count = lay.npolygons;

    Dsu corners(lay.nsides);
    for (const auto& [s, t] : pairs) {
        corners.unite(lay.even_corner[s], lay.even_corner[t]);
        corners.unite(lay.odd_corner[s], lay.odd_corner[t]);
    }

    // dense class ids; odd-corner classes first so they name graph whites
    std::vector<int> odd_id(lay.nsides, -1), even_id(lay.nsides, -1);
    int nodd = 0, neven = 0;
    for (int s = 0; s < lay.nsides; ++s) {
        int ro = corners.find(lay.odd_corner[s]);
        if (odd_id[ro] < 0) odd_id[ro] = nodd++;
        int re = corners.find(lay.even_corner[s]);
        if (even_id[re] < 0) even_id[re] = neven++;
    }
    m.white_classes = neven;
    m.black_classes = nodd;

    std::set<Edge> edges;
    for (const auto& [s, t] : pairs)
        edges.insert(Edge{odd_id[corners.find(lay.odd_corner[s])],
                          even_id[corners.find(lay.even_corner[s])]});
    m.underlying =
        BipartiteGraph(nodd, neven, std::vector<Edge>(edges.begin(), edges.end()));

    m.oriented = true;
    for (const auto& [s, t] : pairs)
        if (lay.parity[s] == lay.parity[t]) m.oriented = false;
    m.orientable = consistent_orientation(lay, pairs);

    // Euler characteristic per glued component
    Dsu comps(std::max(1, lay.npolygons));
    for (const auto& [s, t] : pairs) comps.unite(lay.polygon[s], lay.polygon[t]);
    std::vector<int> verts(lay.npolygons, 0), eds(lay.npolygons, 0), faces(lay.npolygons, 0);
    std::set<int> counted;
    for (int s = 0; s < lay.nsides; ++s) {
        for (int c : {corners.find(lay.odd_corner[s]), corners.find(lay.even_corner[s])}) {
            if (counted.insert(c).second) ++verts[comps.find(lay.polygon[s])];
        }
    }
    for (const auto& [s, t] : pairs) ++eds[comps.find(lay.polygon[s])];
    for (int j = 0; j < lay.npolygons; ++j) ++faces[comps.find(j)];
    for (int j = 0; j < lay.npolygons; ++j) {
        if (comps.find(j) != j) continue;
        m.component_euler.push_back(verts[j] - eds[j] + faces[j]);
    }
    for (int chi : m.component_euler) m.euler_characteristic += chi;
    return m;
}

void enumerate_rec(const Partition& mu, const Layout& lay, std::vector<char>& used,
                   std::vector<std::pair<int, int>>& pairs, std::vector<GluedMap>& out) {
    int s = -1;
    for (int i = 0; i < lay.nsides; ++i) {
        if (!used[i]) {
            s = i;
            break;
        }
    }
    if (s < 0) {
        out.push_back(build_map(mu, lay, pairs));
        return;
    }
    used[s] = 1;
    for (int t = s + 1; t < lay.nsides; ++t) {
        if (used[t]) continue;
        used[t] = 1;
        pairs.push_back({s, t});
        enumerate_rec(mu, lay, used, pairs, out);
        pairs.pop_back();
        used[t] = 0;
    }
    used[s] = 0;
}

Rat sign_pow(int base, int exp) {
    Rat v(1);
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

}  // namespace

std::vector<GluedMap> enumerate_gluings(const Partition& mu, int bound) {
    if (mu.size() > bound)
        fail(errc::limit_exceeded,
             "face type size " + std::to_string(mu.size()) + " exceeds the gluing bound " +
                 std::to_string(bound));
    Layout lay(mu);
    std::vector<GluedMap> out;
    std::vector<char> used(lay.nsides, 0);
    std::vector<std::pair<int, int>> pairs;
    enumerate_rec(mu, lay, used, pairs, out);
    return out;
}

bool orientability(const GluedMap& m) {
    Layout lay(m.face_type);
    return consistent_orientation(lay, m.pairing);
}

MapSums map_sums(const std::vector<GluedMap>& maps, const Partition& lambda) {
    MapSums out;
    // group by isomorphism class first; distinct classes are far fewer than
    // gluings, and each count is the expensive part
    GraphSum all, zonal, oriented;
    for (const GluedMap& m : maps) {
        Rat s1 = sign_pow(-1, m.black_classes);
        all.add(m.underlying, s1);
        zonal.add(m.underlying, sign_pow(-2, m.black_classes));
        if (m.oriented) {
            oriented.add(m.underlying, s1);
            ++out.oriented_count;
        }
        if (m.orientable) ++out.orientable_count;
        ++out.maps;
    }
    out.all_signed = count_embeddings_sum(all, lambda);
    out.all_zonal = count_embeddings_sum(zonal, lambda);
    out.oriented_signed = count_embeddings_sum(oriented, lambda);
    return out;
}

MapSums map_sums(const Partition& mu, const Partition& lambda, int bound) {
    return map_sums(enumerate_gluings(mu, bound), lambda);
}

CharacterResult character_maps(const Partition& mu, const Partition& lambda, int alpha,
                               int bound) {
    if (alpha != 1 && alpha != 2) fail(errc::invalid_input, "alpha must be 1 or 2");
    std::vector<GluedMap> maps = enumerate_gluings(mu, bound);
    int n = mu.size();

    // fix the global sign against the one-row diagram, where the normalized
    // character is n! on the nose
    Rat expect(1);
    for (int i = 2; i <= n; ++i) expect *= i;
    Rat cal = map_sums(maps, Partition(n ? std::vector<int>{n} : std::vector<int>{}))
                  .oriented_signed;
    int sigma;
    if (cal == expect)
        sigma = 1;
    else if (cal == -expect)
        sigma = -1;
    else
        fail(errc::internal, "sign calibration failed: one-row sum is not +-n!");
    if (sigma != (n % 2 ? -1 : 1))
        fail(errc::internal, "sign calibration broke the size-parity rule");

    MapSums sums = map_sums(maps, lambda);
    CharacterResult res;
    res.raw = alpha == 1 ? sums.oriented_signed : sums.all_zonal;
    res.calibration = sigma;
    res.value = res.raw * sigma;
    res.maps = sums.maps;
    return res;
}

GraphSum oriented_map_sum(const Partition& mu, int bound) {
    GraphSum s;
    for (const GluedMap& m : enumerate_gluings(mu, bound))
        if (m.oriented) s.add(m.underlying, sign_pow(-1, m.black_classes));
    return s;
}

GraphSum full_map_sum(const Partition& mu, int bound) {
    GraphSum s;
    for (const GluedMap& m : enumerate_gluings(mu, bound))
        s.add(m.underlying, sign_pow(-1, m.black_classes));
    return s;
}

}  // namespace ydc
