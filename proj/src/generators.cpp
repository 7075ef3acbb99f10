#include <algorithm>
#include <random>

#include "planedeg/toolkit.hpp"

namespace planedeg {

PlaneGraph gen_cylindrical_grid(int c, int k) {
    if (c < 3) throw Error("gen_cylindrical_grid: cycle length must be at least 3");
    if (k < 1) throw Error("gen_cylindrical_grid: path length must be at least 1");
    auto id = [c](int i, int j) { return j * c + ((i % c) + c) % c; };
    std::vector<std::vector<int>> rot(static_cast<std::size_t>(c) * k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < c; ++i) {
            auto& r = rot[id(i, j)];
            r.push_back(id(i + 1, j));
            if (j + 1 < k) r.push_back(id(i, j + 1));
            r.push_back(id(i - 1, j));
            if (j > 0) r.push_back(id(i, j - 1));
        }
    return PlaneGraph::from_rotation(std::move(rot));
}

PlaneGraph gen_cube() { return gen_cylindrical_grid(4, 2); }

DifficultSpec DifficultSpec::parse(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto node = [&](auto&& self) -> DifficultSpec {
        skip_ws();
        DifficultSpec s;
        if (text.compare(pos, 6, "vertex") == 0) {
            s.kind = Vertex;
            pos += 6;
        } else if (text.compare(pos, 4, "edge") == 0) {
            s.kind = Edge;
            pos += 4;
        } else if (text.compare(pos, 4, "cube") == 0) {
            s.kind = Cube;
            pos += 4;
        } else {
            throw ParseError("difficult spec: expected vertex, edge, or cube", pos);
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '(') {
            ++pos;
            while (true) {
                s.children.push_back(self(self));
                skip_ws();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < text.size() && text[pos] == ')') {
                    ++pos;
                    break;
                }
                throw ParseError("difficult spec: expected ',' or ')'", pos);
            }
        }
        return s;
    };
    DifficultSpec s = node(node);
    skip_ws();
    if (pos != text.size()) throw ParseError("difficult spec: trailing input", pos);
    return s;
}

namespace {

struct DifficultBuilder {
    std::vector<std::vector<int>> rot;

    int new_vertex() {
        rot.emplace_back();
        return static_cast<int>(rot.size()) - 1;
    }

    // Appends a cube whose vertex `0` slot is `anchor` (or a fresh vertex).
    // Rotations follow the nested-squares drawing; the anchor keeps its
    // three cube edges contiguous so the cube hangs inside one face.
    std::vector<int> add_cube(int anchor) {
        std::vector<int> ids(8);
        ids[0] = anchor == -1 ? new_vertex() : anchor;
        for (int t = 1; t < 8; ++t) ids[t] = new_vertex();
        auto cube_rot = [](int t) -> std::vector<int> {
            int i = t % 4;
            if (t < 4) return {(i + 1) % 4, i + 4, (i + 3) % 4};
            return {4 + (i + 1) % 4, 4 + (i + 3) % 4, i};
        };
        for (int t = 0; t < 8; ++t)
            for (int s : cube_rot(t)) rot[ids[t]].push_back(ids[s]);
        return ids;
    }

    void build(const DifficultSpec& spec, int attach, bool parent_is_cube) {
        std::vector<int> anchors;  // where children attach
        switch (spec.kind) {
            case DifficultSpec::Vertex: {
                if (attach != -1)
                    throw Error(
                        "gen_difficult: a vertex block can only stand alone at the root");
                int v = new_vertex();
                anchors.assign(spec.children.size(), v);
                break;
            }
            case DifficultSpec::Edge: {
                int a = attach == -1 ? new_vertex() : attach;
                int b = new_vertex();
                rot[a].push_back(b);
                rot[b].push_back(a);
                anchors.assign(spec.children.size(), b);
                break;
            }
            case DifficultSpec::Cube: {
                if (parent_is_cube)
                    throw Error("gen_difficult: two cube blocks would share a vertex");
                auto ids = add_cube(attach);
                for (std::size_t i = 0; i < spec.children.size(); ++i)
                    anchors.push_back(ids[i % 8]);
                break;
            }
        }
        for (std::size_t i = 0; i < spec.children.size(); ++i)
            build(spec.children[i], anchors[i], spec.kind == DifficultSpec::Cube);
    }
};

}  // namespace

PlaneGraph gen_difficult(const DifficultSpec& spec) {
    DifficultBuilder b;
    b.build(spec, -1, false);
    return PlaneGraph::from_rotation(std::move(b.rot));
}

PlaneGraph gen_quadrangulation(std::uint64_t seed, int target_n) {
    if (target_n < 4) throw Error("gen_quadrangulation: need at least 4 vertices");
    std::mt19937_64 rng(seed);
    auto pick = [&rng](std::size_t count) {
        return static_cast<std::size_t>(rng() % count);
    };

    PlaneGraph g = gen_cylindrical_grid(4, 1);  // C4
    while (g.n() < target_n) {
        // Choose a quadrilateral face and a diagonal, then add a vertex
        // joined across it; both new faces are quadrilaterals again.
        int f = static_cast<int>(pick(g.face_count()));
        const Face& face = g.faces()[f];
        int a, c;
        if (pick(2) == 0) {
            a = face.walk[0];
            c = face.walk[2];
        } else {
            a = face.walk[1];
            c = face.walk[3];
        }
        int w = g.n();
        // Insert w between the two face edges at a and at c. Face walk
        // a->b->c->d: at a the walk leaves toward b and arrives from d, so
        // w goes between d and b in a's rotation.
        std::vector<std::vector<int>> rot = g.rotation();
        auto insert_between = [&](int at, int after) {
            // place the new neighbor right after `after` in cw order
            auto& r = rot[at];
            for (std::size_t i = 0; i < r.size(); ++i)
                if (r[i] == after) {
                    r.insert(r.begin() + static_cast<long>(i) + 1, w);
                    return;
                }
            throw Error("gen_quadrangulation: internal rotation mismatch");
        };
        int ia = a == face.walk[0] ? 0 : 1;
        int prev_a = face.walk[(ia + 3) % 4];
        int prev_c = face.walk[(ia + 1) % 4];
        insert_between(a, prev_a);
        insert_between(c, prev_c);
        rot.push_back({a, c});
        g = PlaneGraph::from_rotation(std::move(rot));
    }
    for (const Face& f : g.faces())
        if (f.length() != 4)
            throw GuaranteeError("gen_quadrangulation: non-quadrilateral face", g.to_json());
    return g;
}

}  // namespace planedeg
