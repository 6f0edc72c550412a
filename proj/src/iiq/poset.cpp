#include "poset.hpp"

#include <algorithm>
#include <sstream>

#include "corpus.hpp"

namespace iiq {

std::string poset_dot(const Algebra& a, int budget) {
    bool truncated = false;
    std::vector<IdempotentPair> pairs = enumerate_idempotent_pairs(a, budget, &truncated);

    // Group modulo LR-equivalence; keep the lexicographically least
    // representative of each class.
    struct Node {
        IdempotentPair rep;
        int count = 0;
        int eaf_dim = 0;
        bool strict = false;
    };
    std::vector<Node> nodes;
    for (IdempotentPair& p : pairs) {
        bool placed = false;
        for (Node& n : nodes) {
            if (pair_relations(a, p, n.rep).equiv_LR) {
                ++n.count;
                n.strict = n.strict || p.strict;
                if (vec_cmp(p.e, n.rep.e) < 0 ||
                    (vec_cmp(p.e, n.rep.e) == 0 && vec_cmp(p.f, n.rep.f) < 0))
                    n.rep = p;
                placed = true;
                break;
            }
        }
        if (!placed) {
            Node n;
            n.rep = p;
            n.count = 1;
            n.strict = p.strict;
            n.eaf_dim = eAf_subspace(a, p.e, p.f).dim();
            nodes.push_back(std::move(n));
        }
    }
    std::sort(nodes.begin(), nodes.end(), [](const Node& x, const Node& y) {
        if (x.eaf_dim != y.eaf_dim) return x.eaf_dim < y.eaf_dim;
        if (int c = vec_cmp(x.rep.e, y.rep.e); c != 0) return c < 0;
        return vec_cmp(x.rep.f, y.rep.f) < 0;
    });

    const int n = static_cast<int>(nodes.size());
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                PairRelations r = pair_relations(a, nodes[i].rep, nodes[j].rep);
                lt[i][j] = r.leq_LR && !r.equiv_LR;
            }
    // Covering relations = transitive reduction of the strict order.
    std::ostringstream out;
    out << "digraph idempotent_pairs {\n";
    if (truncated) out << "  // enumeration budget exhausted: graph is truncated\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (int i = 0; i < n; ++i) {
        out << "  n" << i << " [label=\"dim eAf = " << nodes[i].eaf_dim << "\\nclass size "
            << nodes[i].count << "\"";
        if (nodes[i].strict) out << " peripheries=2 style=bold";
        out << "];\n";
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!lt[i][j]) continue;
            bool covered = false;
            for (int k = 0; k < n && !covered; ++k) covered = lt[i][k] && lt[k][j];
            if (!covered) out << "  n" << i << " -> n" << j << ";\n";
        }
    out << "}\n";
    return out.str();
}

}  // namespace iiq
