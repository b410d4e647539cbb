#pragma once

/* Quivers and paths.  Paths are stored in display order: comp.front() is the
 * arrow applied last, comp.back() the arrow applied first, so "ba" (first a,
 * then b) is stored as {b, a} and path action on a representation is the
 * matrix product in display order. */

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace homdim {

struct Quiver {
    struct Arrow {
        std::string name;
        int from = 0;
        int to = 0;
    };

    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertexCount() const { return static_cast<int>(vertices.size()); }
    int arrowCount() const { return static_cast<int>(arrows.size()); }

    int vertexIndex(const std::string& label) const {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == label)
                return static_cast<int>(i);
        throw std::invalid_argument("unknown vertex '" + label + "'");
    }
    int arrowIndex(const std::string& name) const {
        for (size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == name)
                return static_cast<int>(i);
        throw std::invalid_argument("unknown arrow '" + name + "'");
    }

    bool isAcyclic() const {
        // DFS over vertices; arrows are the edges
        std::vector<int> state(vertices.size(), 0);
        std::vector<std::vector<int>> out(vertices.size());
        for (const auto& a : arrows)
            out[a.from].push_back(a.to);
        for (int start = 0; start < vertexCount(); ++start) {
            if (state[start] != 0)
                continue;
            std::vector<std::pair<int, size_t>> stack{{start, 0}};
            state[start] = 1;
            while (!stack.empty()) {
                auto& [v, next] = stack.back();
                if (next < out[v].size()) {
                    int w = out[v][next++];
                    if (state[w] == 1)
                        return false;
                    if (state[w] == 0) {
                        state[w] = 1;
                        stack.push_back({w, 0});
                    }
                } else {
                    state[v] = 2;
                    stack.pop_back();
                }
            }
        }
        return true;
    }
};

inline Quiver makeQuiver(std::vector<std::string> vertices,
                         std::vector<std::tuple<std::string, std::string, std::string>> arrowSpecs) {
    Quiver q;
    q.vertices = std::move(vertices);
    for (size_t i = 0; i < q.vertices.size(); ++i)
        for (size_t j = i + 1; j < q.vertices.size(); ++j)
            if (q.vertices[i] == q.vertices[j])
                throw std::invalid_argument("duplicate vertex label '" + q.vertices[i] + "'");
    for (auto& [name, from, to] : arrowSpecs) {
        for (const auto& a : q.arrows)
            if (a.name == name)
                throw std::invalid_argument("duplicate arrow name '" + name + "'");
        q.arrows.push_back({name, q.vertexIndex(from), q.vertexIndex(to)});
    }
    return q;
}

struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> comp;  // arrow indices, leftmost (last applied) first

    static Path trivial(int v) { return Path{v, v, {}}; }
    int length() const { return static_cast<int>(comp.size()); }
    bool isTrivial() const { return comp.empty(); }
    bool operator==(const Path&) const = default;
};

/* p after q; nullopt when endpoints do not match. */
inline std::optional<Path> composePaths(const Path& p, const Path& q) {
    if (p.source != q.target)
        return std::nullopt;
    Path r;
    r.source = q.source;
    r.target = p.target;
    r.comp = p.comp;
    r.comp.insert(r.comp.end(), q.comp.begin(), q.comp.end());
    return r;
}

/* Canonical path order: by length, then source, then target, then arrow
 * sequence.  Fixes the basis order of every presented algebra. */
inline bool pathLess(const Path& a, const Path& b) {
    if (a.length() != b.length())
        return a.length() < b.length();
    if (a.source != b.source)
        return a.source < b.source;
    if (a.target != b.target)
        return a.target < b.target;
    return a.comp < b.comp;
}

inline std::string pathLabel(const Quiver& q, const Path& p) {
    if (p.isTrivial())
        return "e_" + q.vertices[p.source];
    std::string s;
    for (size_t i = 0; i < p.comp.size(); ++i) {
        if (i > 0)
            s += "*";
        s += q.arrows[p.comp[i]].name;
    }
    return s;
}

/* Build a path from arrow names in display order (rightmost applied first). */
inline Path pathFromArrowNames(const Quiver& q, const std::vector<std::string>& names, int trivialVertex = -1) {
    if (names.empty()) {
        if (trivialVertex < 0)
            throw std::invalid_argument("empty path needs a vertex");
        return Path::trivial(trivialVertex);
    }
    Path p;
    p.comp.reserve(names.size());
    for (const auto& n : names)
        p.comp.push_back(q.arrowIndex(n));
    p.source = q.arrows[p.comp.back()].from;
    p.target = q.arrows[p.comp.front()].to;
    for (size_t i = 0; i + 1 < p.comp.size(); ++i)
        if (q.arrows[p.comp[i]].from != q.arrows[p.comp[i + 1]].to)
            throw std::invalid_argument("path " + pathLabel(q, p) + " is not composable");
    return p;
}

/* All paths of length < bound, canonically ordered.  Throws when the count
 * explodes (cyclic quivers with a large bound). */
inline std::vector<Path> enumeratePaths(const Quiver& q, int bound, size_t cap = 20000) {
    std::vector<Path> all;
    std::vector<Path> current;
    for (int v = 0; v < q.vertexCount(); ++v)
        current.push_back(Path::trivial(v));
    for (int len = 0; len < bound; ++len) {
        all.insert(all.end(), current.begin(), current.end());
        if (all.size() > cap)
            throw std::invalid_argument("path enumeration exceeds cap; lengthBound too large?");
        std::vector<Path> longer;
        for (const auto& p : current)
            for (int a = 0; a < q.arrowCount(); ++a)
                if (q.arrows[a].from == p.target) {
                    Path np;
                    np.source = p.source;
                    np.target = q.arrows[a].to;
                    np.comp.reserve(p.comp.size() + 1);
                    np.comp.push_back(a);
                    np.comp.insert(np.comp.end(), p.comp.begin(), p.comp.end());
                    longer.push_back(std::move(np));
                }
        current = std::move(longer);
    }
    std::sort(all.begin(), all.end(), pathLess);
    return all;
}

}  // namespace homdim
