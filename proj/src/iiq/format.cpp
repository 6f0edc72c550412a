#include "format.hpp"

#include <algorithm>
#include <sstream>

namespace iiq {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    fail(Errc::parse, "line " + std::to_string(line) + ": " + msg);
}

long to_int(const Line& ln, const std::string& tok, long lo, long hi) {
    try {
        size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        if (v < lo || v > hi) parse_fail(ln.number, "value " + tok + " out of range");
        return v;
    } catch (const std::logic_error&) {
        parse_fail(ln.number, "expected an integer, got '" + tok + "'");
    }
}

Vec parse_coords(const Field& f, const Line& ln, size_t from, int dim) {
    if (static_cast<int>(ln.tokens.size() - from) != dim)
        parse_fail(ln.number, "expected " + std::to_string(dim) + " coordinates, got " +
                                  std::to_string(ln.tokens.size() - from));
    Vec v(dim);
    for (int i = 0; i < dim; ++i) {
        try {
            v[i] = parse_scalar(f, ln.tokens[from + i]);
        } catch (const Error& e) {
            parse_fail(ln.number, e.what());
        }
    }
    return v;
}

}  // namespace

AlgebraDocument parse_algebra_file(const std::string& text) {
    std::vector<Line> lines;
    {
        std::istringstream in(text);
        std::string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            if (auto pos = raw.find('#'); pos != std::string::npos) raw.resize(pos);
            std::istringstream ls(raw);
            Line ln{number, {}};
            std::string tok;
            while (ls >> tok) ln.tokens.push_back(tok);
            if (!ln.tokens.empty()) lines.push_back(std::move(ln));
        }
    }

    std::optional<Field> field;
    std::optional<int> dim;
    std::vector<std::string> labels;
    bool have_labels = false;
    std::optional<Vec> unit;
    std::vector<SCEntry> entries;
    std::map<int, int> levi_sizes;
    std::map<int, std::map<std::pair<int, int>, Vec>> levi_units;
    std::map<std::string, Vec> elements;
    std::map<std::string, std::vector<Vec>> subspace_rows;
    std::string open_subspace;
    int open_remaining = 0;

    auto need_header = [&](const Line& ln) {
        if (!field) parse_fail(ln.number, "'field' must come first");
        if (!dim) parse_fail(ln.number, "'dim' must come before this line");
    };

    for (const Line& ln : lines) {
        const std::string& kw = ln.tokens[0];
        if (open_remaining > 0 && kw != "vec")
            parse_fail(ln.number, "expected " + std::to_string(open_remaining) +
                                      " more 'vec' lines for subspace " + open_subspace);
        if (kw == "field") {
            if (field) parse_fail(ln.number, "duplicate 'field'");
            if (ln.tokens.size() != 2) parse_fail(ln.number, "usage: field Q|F<p>");
            const std::string& spec = ln.tokens[1];
            try {
                if (spec == "Q")
                    field = Field::rationals();
                else if (spec.size() > 1 && spec[0] == 'F')
                    field = Field::prime(to_int(ln, spec.substr(1), 2, 1000000));
                else
                    parse_fail(ln.number, "unknown field '" + spec + "'");
            } catch (const Error& e) {
                parse_fail(ln.number, e.what());
            }
        } else if (kw == "dim") {
            if (!field) parse_fail(ln.number, "'field' must come before 'dim'");
            if (dim) parse_fail(ln.number, "duplicate 'dim'");
            if (ln.tokens.size() != 2) parse_fail(ln.number, "usage: dim <n>");
            dim = static_cast<int>(to_int(ln, ln.tokens[1], 0, 4096));
        } else if (kw == "labels") {
            need_header(ln);
            if (have_labels) parse_fail(ln.number, "duplicate 'labels'");
            have_labels = true;
            labels.assign(ln.tokens.begin() + 1, ln.tokens.end());
            if (static_cast<int>(labels.size()) != *dim)
                parse_fail(ln.number, "expected " + std::to_string(*dim) + " labels");
        } else if (kw == "unit") {
            need_header(ln);
            if (unit) parse_fail(ln.number, "duplicate 'unit'");
            unit = parse_coords(*field, ln, 1, *dim);
        } else if (kw == "sc") {
            need_header(ln);
            if (ln.tokens.size() != 5) parse_fail(ln.number, "usage: sc i j k c");
            SCEntry e;
            e.i = static_cast<int>(to_int(ln, ln.tokens[1], 0, *dim - 1));
            e.j = static_cast<int>(to_int(ln, ln.tokens[2], 0, *dim - 1));
            e.k = static_cast<int>(to_int(ln, ln.tokens[3], 0, *dim - 1));
            try {
                e.c = parse_scalar(*field, ln.tokens[4]);
            } catch (const Error& err) {
                parse_fail(ln.number, err.what());
            }
            entries.push_back(std::move(e));
        } else if (kw == "levi") {
            need_header(ln);
            if (ln.tokens.size() != 3) parse_fail(ln.number, "usage: levi <block> <n>");
            int blk = static_cast<int>(to_int(ln, ln.tokens[1], 0, 255));
            int n = static_cast<int>(to_int(ln, ln.tokens[2], 1, 64));
            if (levi_sizes.count(blk)) parse_fail(ln.number, "duplicate levi block");
            levi_sizes[blk] = n;
        } else if (kw == "leviunit") {
            need_header(ln);
            if (ln.tokens.size() < 4) parse_fail(ln.number, "usage: leviunit <block> <i> <j> c...");
            int blk = static_cast<int>(to_int(ln, ln.tokens[1], 0, 255));
            if (!levi_sizes.count(blk)) parse_fail(ln.number, "leviunit before its levi line");
            int n = levi_sizes[blk];
            int i = static_cast<int>(to_int(ln, ln.tokens[2], 0, n - 1));
            int j = static_cast<int>(to_int(ln, ln.tokens[3], 0, n - 1));
            if (levi_units[blk].count({i, j})) parse_fail(ln.number, "duplicate leviunit");
            levi_units[blk][{i, j}] = parse_coords(*field, ln, 4, *dim);
        } else if (kw == "subspace") {
            need_header(ln);
            if (ln.tokens.size() != 3) parse_fail(ln.number, "usage: subspace <name> <rows>");
            open_subspace = ln.tokens[1];
            if (subspace_rows.count(open_subspace))
                parse_fail(ln.number, "duplicate subspace '" + open_subspace + "'");
            subspace_rows[open_subspace] = {};
            open_remaining = static_cast<int>(to_int(ln, ln.tokens[2], 0, 4096));
        } else if (kw == "vec") {
            need_header(ln);
            if (open_remaining <= 0) parse_fail(ln.number, "'vec' outside a subspace block");
            subspace_rows[open_subspace].push_back(parse_coords(*field, ln, 1, *dim));
            --open_remaining;
        } else if (kw == "element") {
            need_header(ln);
            if (ln.tokens.size() < 2) parse_fail(ln.number, "usage: element <name> c...");
            if (elements.count(ln.tokens[1]))
                parse_fail(ln.number, "duplicate element '" + ln.tokens[1] + "'");
            elements[ln.tokens[1]] = parse_coords(*field, ln, 2, *dim);
        } else {
            parse_fail(ln.number, "unknown keyword '" + kw + "'");
        }
    }
    if (open_remaining > 0)
        fail(Errc::parse, "unterminated subspace '" + open_subspace + "'");
    if (!field) fail(Errc::parse, "missing 'field'");
    if (!dim) fail(Errc::parse, "missing 'dim'");

    Algebra::Options opts;
    opts.unit = unit;
    if (!levi_sizes.empty()) {
        int expect = 0;
        std::vector<MatrixUnitSystem> blocks;
        for (const auto& [blk, n] : levi_sizes) {
            if (blk != expect++) fail(Errc::parse, "levi blocks must be numbered consecutively");
            MatrixUnitSystem sys;
            sys.n = n;
            sys.units.resize(static_cast<size_t>(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    auto it = levi_units[blk].find({i, j});
                    if (it == levi_units[blk].end())
                        fail(Errc::parse, "missing leviunit " + std::to_string(blk) + " " +
                                              std::to_string(i) + " " + std::to_string(j));
                    sys.units[static_cast<size_t>(i) * n + j] = it->second;
                }
            blocks.push_back(std::move(sys));
        }
        opts.levi_blocks = std::move(blocks);
    }

    AlgebraDocument doc{Algebra::create(*field, *dim, labels, entries, std::move(opts)), {}, {}};
    for (auto& [name, rows] : subspace_rows)
        doc.subspaces.emplace(name, doc.algebra.span(rows));
    doc.elements = std::move(elements);
    return doc;
}

std::string emit_algebra_file(const AlgebraDocument& doc) {
    const Algebra& a = doc.algebra;
    std::ostringstream out;
    out << "field " << a.field().to_string() << "\n";
    out << "dim " << a.dim() << "\n";
    out << "labels";
    for (const std::string& l : a.labels()) out << " " << l;
    out << "\n";
    if (a.unit()) {
        out << "unit";
        for (const Scalar& c : *a.unit()) out << " " << scalar_to_string(c);
        out << "\n";
    }
    std::vector<SCEntry> entries = a.entries();
    std::sort(entries.begin(), entries.end(), [](const SCEntry& x, const SCEntry& y) {
        return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k);
    });
    for (const SCEntry& e : entries)
        out << "sc " << e.i << " " << e.j << " " << e.k << " " << scalar_to_string(e.c) << "\n";
    try {
        const LeviDecomposition& ld = a.levi();
        for (size_t r = 0; r < ld.blocks.size(); ++r) {
            out << "levi " << r << " " << ld.blocks[r].n << "\n";
            for (int i = 0; i < ld.blocks[r].n; ++i)
                for (int j = 0; j < ld.blocks[r].n; ++j) {
                    out << "leviunit " << r << " " << i << " " << j;
                    for (const Scalar& c : ld.blocks[r].unit(i, j))
                        out << " " << scalar_to_string(c);
                    out << "\n";
                }
        }
    } catch (const Error& e) {
        if (e.code() != Errc::not_split) throw;  // emit without Levi data
    }
    for (const auto& [name, v] : doc.elements) {
        out << "element " << name;
        for (const Scalar& c : v) out << " " << scalar_to_string(c);
        out << "\n";
    }
    for (const auto& [name, space] : doc.subspaces) {
        out << "subspace " << name << " " << space.dim() << "\n";
        for (const Vec& row : space.basis()) {
            out << "vec";
            for (const Scalar& c : row) out << " " << scalar_to_string(c);
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace iiq
