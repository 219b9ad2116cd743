#include "rotsys/families.hpp"

#include <sstream>

#include "rotsys/detect.hpp"
#include "rotsys/faces.hpp"

namespace rotsys {

namespace {

std::string tag(char prefix, int i) {
    std::ostringstream os;
    os << prefix << (i < 10 ? "0" : "") << i;
    return os.str();
}

}  // namespace

// Block i of the chain is K5 minus the edge between its two end vertices
// (west end w_i, east end e_i) with middle triangle a_i, b_i, c_i. The
// east end of block i is the west end of block i+1; the chain closes with
// the single edge from the last east end back to the first west end.
//
// The rotation realizes the band picture: blocks side by side along one
// handle direction, each middle triangle wrapping the other direction, so
// every vertex lists east neighbors, then the wrap, then west neighbors.
RotationGraph generate_gs(int s) {
    if (s < 2) throw ValidationError("generate_gs requires s >= 2");
    if (s > 99) throw ValidationError("generate_gs supports s <= 99");

    // West end of block i (1-based): j(i-1) for i > 1, else "end0".
    // East end of block i: j(i) for i < s, else "end1".
    const std::string first = "end0";
    const std::string last = "end1";
    auto west = [&](int i) { return i == 1 ? first : tag('j', i - 1); };
    auto east = [&](int i) { return i == s ? last : tag('j', i); };

    RotationGraph::Rotations rot;
    for (int i = 1; i <= s; ++i) {
        const std::string a = tag('a', i), b = tag('b', i), c = tag('c', i);
        rot.emplace_back(a, std::vector<std::string>{east(i), c, west(i), b});
        rot.emplace_back(b, std::vector<std::string>{east(i), a, west(i), c});
        rot.emplace_back(c, std::vector<std::string>{east(i), b, west(i), a});
    }
    for (int i = 1; i < s; ++i) {
        rot.emplace_back(tag('j', i),
                         std::vector<std::string>{tag('b', i + 1), tag('a', i + 1), tag('a', i),
                                                  tag('b', i), tag('c', i), tag('c', i + 1)});
    }
    rot.emplace_back(first, std::vector<std::string>{tag('b', 1), tag('a', 1), last, tag('c', 1)});
    rot.emplace_back(last, std::vector<std::string>{first, tag('a', s), tag('b', s), tag('c', s)});
    return RotationGraph::from_rotations(rot);
}

// Blocks are K4 copies side by side; block i has west pair (px_{i-1},
// py_{i-1}) and east pair (px_i, py_i), the pair edge being shared between
// consecutive blocks. The apex "z" sits in the closing band segment,
// joined to the two free pairs. Each block routes one diagonal around the
// wrap direction.
RotationGraph generate_gprime(int s) {
    if (s < 1) throw ValidationError("generate_gprime requires s >= 1");
    if (s > 45) throw ValidationError("generate_gprime supports s <= 45");

    const int blocks = 2 * s + 1;
    auto px = [&](int i) { return tag('x', i); };  // i = 0..blocks
    auto py = [&](int i) { return tag('y', i); };

    RotationGraph::Rotations rot;
    // Interior junction pairs i = 1..blocks-1.
    for (int i = 1; i < blocks; ++i) {
        rot.emplace_back(px(i), std::vector<std::string>{px(i + 1), py(i + 1), px(i - 1),
                                                         py(i - 1), py(i)});
        rot.emplace_back(py(i), std::vector<std::string>{py(i + 1), px(i + 1), px(i),
                                                         py(i - 1), px(i - 1)});
    }
    // Free west pair of block 1.
    rot.emplace_back(px(0), std::vector<std::string>{px(1), py(1), "z", py(0)});
    rot.emplace_back(py(0), std::vector<std::string>{py(1), px(1), px(0), "z"});
    // Free east pair of the last block.
    rot.emplace_back(px(blocks), std::vector<std::string>{px(blocks - 1), py(blocks - 1),
                                                          py(blocks), "z"});
    rot.emplace_back(py(blocks), std::vector<std::string>{"z", px(blocks), py(blocks - 1),
                                                          px(blocks - 1)});
    rot.emplace_back("z", std::vector<std::string>{px(0), px(blocks), py(blocks), py(0)});
    return RotationGraph::from_rotations(rot);
}

namespace {

void add_item(FamilyCertificate& cert, const std::string& name, bool passed,
              const std::string& detail) {
    cert.items.push_back({name, passed, detail});
    if (!passed) cert.all_passed = false;
}

}  // namespace

FamilyCertificate certify_family(const RotationGraph& g, const FamilySpec& spec) {
    FamilyCertificate cert;

    add_item(cert, "vertex-count", g.vertex_count() == spec.expected_vertices(),
             "have " + std::to_string(g.vertex_count()) + ", expect " +
                 std::to_string(spec.expected_vertices()));
    add_item(cert, "edge-count", g.edge_count() == spec.expected_edges(),
             "have " + std::to_string(g.edge_count()) + ", expect " +
                 std::to_string(spec.expected_edges()));

    if (!cert.all_passed) throw CertificationError("family certificate failed: wrong size");

    const EmbeddingSummary emb = summarize_embedding(g);
    add_item(cert, "genus-1", emb.genus.has_value() && *emb.genus == 1,
             "euler characteristic " + std::to_string(emb.euler_characteristic));

    SearchBudget big;
    big.max_vertices = 128;
    const int chi = chromatic_number(g, big);
    add_item(cert, "chromatic-5", chi == 5, "chromatic number " + std::to_string(chi));
    if (chi >= 1) {
        // Record a concrete proper 5-coloring through the list solver.
        ListAssignment uniform;
        uniform.lists.assign(g.vertex_count(), {1, 2, 3, 4, 5});
        if (auto col = solve_list_coloring(g, uniform)) cert.five_coloring = *col;
        add_item(cert, "five-coloring", coloring_is_proper(g, cert.five_coloring), "");
    }

    if (spec.family == Family::GS) {
        add_item(cert, "no-k5", !find_k5_variant(g, Pattern::K5).has_value(), "");
        add_item(cert, "k5minus-present", find_k5_variant(g, Pattern::K5Minus).has_value(), "");
        bool no_cycles = true;
        std::string found;
        for (int len = 6; len <= spec.derived_k(); ++len) {
            if (has_cycle_of_length(g, len)) {
                no_cycles = false;
                found = "cycle of length " + std::to_string(len);
                break;
            }
        }
        add_item(cert, "no-mid-cycles", no_cycles, found);
    } else {
        add_item(cert, "no-k5minus", !find_k5_variant(g, Pattern::K5Minus).has_value(), "");
        add_item(cert, "hamiltonian", find_hamiltonian_cycle(g).has_value(), "");
    }

    if (!cert.all_passed) {
        std::string names;
        for (const auto& item : cert.items)
            if (!item.passed) names += " " + item.name;
        throw CertificationError("family certificate failed:" + names);
    }
    return cert;
}

}  // namespace rotsys
