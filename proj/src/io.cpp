#include "edgeflow/io.hpp"

#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "edgeflow/errors.hpp"

namespace edgeflow::io {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long parse_int(const std::string& tok, const std::string& file, long line) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(file, line, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(file, line, "expected an integer, got '" + tok + "'");
    return v;
}

double parse_double(const std::string& tok, const std::string& file, long line) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(file, line, "expected a number, got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(file, line, "expected a number, got '" + tok + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& tok, const std::string& file, long line,
                        int base = 10) {
    std::size_t pos = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(tok, &pos, base);
    } catch (const std::exception&) {
        throw ParseError(file, line, "expected an unsigned integer, got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(file, line, "expected an unsigned integer, got '" + tok + "'");
    return v;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open for writing: " + path);
    return f;
}

void finish_write(std::ofstream& f, const std::string& path) {
    f.flush();
    if (!f) throw IoError("write failed: " + path);
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

GraphFile parse_graph_text(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string raw;
    long line_no = 0;

    bool have_header = false;
    long declared_nodes = 0;
    std::vector<std::pair<int, int>> pairs;
    std::map<long, std::array<double, 2>> coords;
    long max_id = -1;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> f = split_fields(line);

        if (f[0] == "nodes") {
            if (f.size() != 2)
                throw ParseError(name, line_no, "expected 'nodes <N>'");
            if (have_header)
                throw ParseError(name, line_no, "duplicate 'nodes' header");
            declared_nodes = parse_int(f[1], name, line_no);
            if (declared_nodes < 0)
                throw ParseError(name, line_no, "node count must be >= 0");
            have_header = true;
        } else if (f[0] == "coord") {
            if (f.size() != 4)
                throw ParseError(name, line_no, "expected 'coord <i> <x> <y>'");
            const long i = parse_int(f[1], name, line_no);
            if (i < 0) throw ParseError(name, line_no, "coord node id must be >= 0");
            if (coords.count(i))
                throw ParseError(name, line_no,
                                 "duplicate coord for node " + std::to_string(i));
            coords[i] = {parse_double(f[2], name, line_no),
                         parse_double(f[3], name, line_no)};
            max_id = std::max(max_id, i);
        } else {
            if (f.size() != 2)
                throw ParseError(name, line_no, "expected 'tail<TAB>head'");
            const long t = parse_int(f[0], name, line_no);
            const long h = parse_int(f[1], name, line_no);
            if (t < 0 || h < 0)
                throw ParseError(name, line_no, "node ids must be >= 0");
            pairs.emplace_back(static_cast<int>(t), static_cast<int>(h));
            max_id = std::max({max_id, t, h});
        }
    }

    const int n = have_header ? static_cast<int>(declared_nodes)
                              : static_cast<int>(max_id + 1);
    GraphFile gf;
    gf.graph = Graph::from_oriented(n, pairs);

    if (!coords.empty()) {
        gf.coords.assign(static_cast<std::size_t>(n), {0.0, 0.0});
        for (const auto& [i, xy] : coords) {
            if (i >= n)
                throw ParseError(name, line_no,
                                 "coord for node " + std::to_string(i) +
                                     " exceeds node count " + std::to_string(n));
            gf.coords[static_cast<std::size_t>(i)] = xy;
        }
        if (static_cast<long>(coords.size()) != n)
            throw ParseError(name, line_no,
                             "coord lines must cover every node or be omitted entirely");
    }
    return gf;
}

GraphFile read_graph_file(const std::string& path) {
    return parse_graph_text(read_text_file(path), path);
}

void write_graph_file(const GraphFile& gf, const std::string& path) {
    if (gf.has_coords() &&
        gf.coords.size() != static_cast<std::size_t>(gf.graph.num_nodes()))
        throw DimensionError("write_graph_file: coords do not match node count");

    std::ofstream f = open_for_write(path);
    f << "# " << gf.graph.num_nodes() << " nodes, " << gf.graph.num_edges()
      << " edges; one 'tail<TAB>head' line per edge\n";
    f << "nodes " << gf.graph.num_nodes() << "\n";
    for (const Edge& e : gf.graph.edges()) f << e.tail << "\t" << e.head << "\n";
    for (std::size_t i = 0; i < gf.coords.size(); ++i)
        f << "coord " << i << " " << format_value(gf.coords[i][0]) << " "
          << format_value(gf.coords[i][1]) << "\n";
    finish_write(f, path);
}

std::uint64_t edge_list_hash(const Graph& g) {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](const char* s) {
        for (; *s; ++s) {
            h ^= static_cast<unsigned char>(*s);
            h *= 1099511628211ULL;
        }
    };
    char buf[64];
    std::snprintf(buf, sizeof(buf), "nodes:%d\n", g.num_nodes());
    mix(buf);
    for (const Edge& e : g.edges()) {
        std::snprintf(buf, sizeof(buf), "%d>%d\n", e.tail, e.head);
        mix(buf);
    }
    return h;
}

namespace {

std::string hash_hex(std::uint64_t h) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

void write_indexed_signal(const std::string& path, std::span<const double> values,
                          const Graph& g, const std::string& graph_name,
                          const char* what, const char* count_key) {
    std::ofstream f = open_for_write(path);
    f << "# " << what << "\n";
    f << "# graph: " << graph_name << "\n";
    f << "# orientation: positive along each edge's stored tail->head direction\n";
    f << "# graph_hash: " << hash_hex(edge_list_hash(g)) << "\n";
    f << "# " << count_key << ": " << values.size() << "\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        f << i << " " << format_value(values[i]) << "\n";
    finish_write(f, path);
}

std::vector<double> read_indexed_signal(const std::string& path, const Graph& g,
                                        std::size_t expected, const char* count_key,
                                        const char* what) {
    std::istringstream in(read_text_file(path));
    std::string raw;
    long line_no = 0;

    std::optional<std::uint64_t> declared_hash;
    std::optional<long> declared_count;
    std::vector<double> values(expected, 0.0);
    std::vector<bool> seen(expected, false);
    std::size_t entries = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string body = trim(line.substr(1));
            const std::string hash_key = "graph_hash:";
            const std::string count_prefix = std::string(count_key) + ":";
            if (body.rfind(hash_key, 0) == 0)
                declared_hash = parse_u64(trim(body.substr(hash_key.size())), path,
                                          line_no, 16);
            else if (body.rfind(count_prefix, 0) == 0)
                declared_count = parse_int(trim(body.substr(count_prefix.size())), path,
                                           line_no);
            continue;
        }
        const std::vector<std::string> f = split_fields(line);
        if (f.size() != 2)
            throw ParseError(path, line_no, std::string("expected '<index> <value>'"));
        const long idx = parse_int(f[0], path, line_no);
        if (idx < 0 || static_cast<std::size_t>(idx) >= expected)
            throw ParseError(path, line_no,
                             "index " + std::to_string(idx) + " out of range [0, " +
                                 std::to_string(expected) + ")");
        if (seen[static_cast<std::size_t>(idx)])
            throw ParseError(path, line_no, "duplicate index " + std::to_string(idx));
        seen[static_cast<std::size_t>(idx)] = true;
        values[static_cast<std::size_t>(idx)] = parse_double(f[1], path, line_no);
        ++entries;
    }

    if (declared_hash && *declared_hash != edge_list_hash(g))
        throw GraphHashMismatchError(
            std::string(what) + " file " + path + " was written for a different graph " +
            "(hash " + hash_hex(*declared_hash) + ", expected " +
            hash_hex(edge_list_hash(g)) + ")");
    if (declared_count && *declared_count != static_cast<long>(expected))
        throw DimensionError(std::string(what) + " file " + path + " declares " +
                             std::to_string(*declared_count) + " entries, graph needs " +
                             std::to_string(expected));
    if (entries != expected)
        throw DimensionError(std::string(what) + " file " + path + " has " +
                             std::to_string(entries) + " entries, graph needs " +
                             std::to_string(expected));
    return values;
}

}  // namespace

void write_flow_file(const std::string& path, const EdgeSignal& f, const Graph& g,
                     const std::string& graph_name) {
    if (f.size() != static_cast<std::size_t>(g.num_edges()))
        throw DimensionError("write_flow_file: flow length does not match edge count");
    write_indexed_signal(path, f.values, g, graph_name, "edge flow", "edges");
}

EdgeSignal read_flow_file(const std::string& path, const Graph& g) {
    return EdgeSignal(read_indexed_signal(
        path, g, static_cast<std::size_t>(g.num_edges()), "edges", "flow"));
}

void write_node_signal_file(const std::string& path, const NodeSignal& s, const Graph& g,
                            const std::string& graph_name) {
    if (s.size() != static_cast<std::size_t>(g.num_nodes()))
        throw DimensionError("write_node_signal_file: length does not match node count");
    write_indexed_signal(path, s.values, g, graph_name, "node signal", "nodes");
}

NodeSignal read_node_signal_file(const std::string& path, const Graph& g) {
    return NodeSignal(read_indexed_signal(
        path, g, static_cast<std::size_t>(g.num_nodes()), "nodes", "node signal"));
}

FilterSpecFile read_filter_spec_file(const std::string& path) {
    std::istringstream in(read_text_file(path));
    std::string raw;
    long line_no = 0;
    FilterSpecFile out;
    bool have_kind = false;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const std::size_t sp = line.find_first_of(" \t");
        const std::string key = (sp == std::string::npos) ? line : line.substr(0, sp);
        const std::string value = (sp == std::string::npos) ? "" : trim(line.substr(sp));
        if (value.empty())
            throw ParseError(path, line_no, "expected '<key> <value>'");

        if (key == "kind") {
            const auto k = filters::kind_from_name(value);
            if (!k) throw ParseError(path, line_no, "unknown filter kind '" + value + "'");
            out.spec.kind = *k;
            have_kind = true;
        } else if (key == "alpha") {
            out.spec.alpha = parse_double(value, path, line_no);
        } else if (key == "beta") {
            out.spec.beta = parse_double(value, path, line_no);
        } else if (key == "mu") {
            out.spec.mu = parse_double(value, path, line_no);
        } else if (key == "k") {
            out.spec.k = static_cast<int>(parse_int(value, path, line_no));
        } else if (key == "phi") {
            out.phi_path = value;
        } else {
            throw ParseError(path, line_no, "unknown key '" + key + "'");
        }
    }
    if (!have_kind) throw ParseError(path, line_no, "missing required key 'kind'");
    return out;
}

void write_filter_spec_file(const std::string& path, const filters::FilterSpec& spec,
                            const std::optional<std::string>& phi_path) {
    std::ofstream f = open_for_write(path);
    f << "kind " << filters::kind_name(spec.kind) << "\n";
    f << "alpha " << format_value(spec.alpha) << "\n";
    f << "beta " << format_value(spec.beta) << "\n";
    f << "mu " << format_value(spec.mu) << "\n";
    f << "k " << spec.k << "\n";
    if (phi_path) f << "phi " << *phi_path << "\n";
    finish_write(f, path);
}

flowgen::FlowRecipe read_flow_recipe_file(const std::string& path) {
    std::istringstream in(read_text_file(path));
    std::string raw;
    long line_no = 0;
    flowgen::FlowRecipe r;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> f = split_fields(line);
        if (f.size() != 2) throw ParseError(path, line_no, "expected '<key> <value>'");
        const std::string& key = f[0];
        const std::string& value = f[1];

        if (key == "harmonic_weight")
            r.harmonic_weight = parse_double(value, path, line_no);
        else if (key == "gradient_weight")
            r.gradient_weight = parse_double(value, path, line_no);
        else if (key == "linegraph_smooth_weight")
            r.linegraph_smooth_weight = parse_double(value, path, line_no);
        else if (key == "noise_sigma")
            r.noise_sigma = parse_double(value, path, line_no);
        else if (key == "seed")
            r.seed = parse_u64(value, path, line_no);
        else if (key == "linegraph_cutoff")
            r.linegraph_cutoff = static_cast<int>(parse_int(value, path, line_no));
        else
            throw ParseError(path, line_no, "unknown key '" + key + "'");
    }
    return r;
}

void write_flow_recipe_file(const std::string& path, const flowgen::FlowRecipe& r) {
    std::ofstream f = open_for_write(path);
    f << "harmonic_weight " << format_value(r.harmonic_weight) << "\n";
    f << "gradient_weight " << format_value(r.gradient_weight) << "\n";
    f << "linegraph_smooth_weight " << format_value(r.linegraph_smooth_weight) << "\n";
    f << "noise_sigma " << format_value(r.noise_sigma) << "\n";
    f << "seed " << r.seed << "\n";
    f << "linegraph_cutoff " << r.linegraph_cutoff << "\n";
    finish_write(f, path);
}

void write_operator_file(const std::string& path, const SparseMatrix& m) {
    std::ofstream f = open_for_write(path);
    f << "# rows " << m.rows() << "\n";
    f << "# cols " << m.cols() << "\n";
    f << "# nnz " << m.nonzeros() << "\n";
    for (const Triplet& t : m.triplets())
        f << t.row << " " << t.col << " " << format_value(t.value) << "\n";
    finish_write(f, path);
}

}  // namespace edgeflow::io
