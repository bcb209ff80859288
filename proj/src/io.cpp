#include "gqlrc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gqlrc {

namespace {

json subspace_to_json(const Field& F, const Subspace& s) {
    json rows = json::array();
    for (const auto& row : s.basis()) {
        json jrow = json::array();
        for (felem c : row) jrow.push_back(F.coeffs(c));
        rows.push_back(std::move(jrow));
    }
    return rows;
}

Subspace subspace_from_json(const Field& F, unsigned ambient_dim, const json& j) {
    std::vector<Coords> rows;
    for (const auto& jrow : j) {
        Coords row;
        for (const auto& entry : jrow)
            row.push_back(F.from_coeffs(entry.get<std::vector<unsigned>>()));
        rows.push_back(std::move(row));
    }
    return Subspace::from_rows(F, ambient_dim, rows);
}

} // namespace

json egg_to_json(const Egg& egg) {
    json j;
    j["p"] = egg.field.p();
    j["h"] = egg.field.h();
    j["n"] = egg.n;
    j["m"] = egg.m;
    json elems = json::array(), tangs = json::array();
    for (const auto& e : egg.elements) elems.push_back(subspace_to_json(egg.field, e));
    for (const auto& t : egg.tangents) tangs.push_back(subspace_to_json(egg.field, t));
    j["elements"] = std::move(elems);
    j["tangents"] = std::move(tangs);
    return j;
}

Egg egg_from_json(const json& j) {
    Egg egg;
    unsigned p = j.at("p").get<unsigned>();
    unsigned h = j.at("h").get<unsigned>();
    egg.field = Field::create(p, h);
    egg.n = j.at("n").get<unsigned>();
    egg.m = j.at("m").get<unsigned>();
    if (egg.n < 1 || egg.m < 1)
        throw std::invalid_argument("egg parameters n, m must be positive");
    unsigned ambient = egg.ambient_dim();
    for (const auto& je : j.at("elements"))
        egg.elements.push_back(subspace_from_json(egg.field, ambient, je));
    for (const auto& jt : j.at("tangents"))
        egg.tangents.push_back(subspace_from_json(egg.field, ambient, jt));
    if (egg.elements.size() != egg.tangents.size())
        throw std::invalid_argument("egg file: element/tangent lists differ in length");
    return egg;
}

Egg load_egg(const std::string& path, EggReport* report) {
    json j = json::parse(read_text_file(path));
    Egg egg = egg_from_json(j);
    EggReport rep = verify_egg(egg);
    if (report) *report = rep;
    return egg;
}

void save_egg(const Egg& egg, const std::string& path) {
    write_text_file(path, egg_to_json(egg).dump(2) + "\n");
}

json structure_to_json(const IncidenceStructure& is) {
    json j;
    j["kind"] = is.kind;
    if (is.params) {
        j["params"] = {{"s", is.params->s}, {"t", is.params->t}, {"alpha", is.params->alpha}};
    } else {
        j["params"] = nullptr;
    }
    json pts = json::array();
    for (std::uint32_t i = 0; i < is.num_points(); ++i)
        pts.push_back({{"id", i}, {"type", is.point_types[i]}});
    json lines = json::array();
    for (std::uint32_t l = 0; l < is.num_lines(); ++l)
        lines.push_back({{"id", l}, {"type", is.line_types[l]}, {"points", is.lines[l]}});
    j["points"] = std::move(pts);
    j["lines"] = std::move(lines);
    return j;
}

IncidenceStructure structure_from_json(const json& j) {
    IncidenceStructure is;
    is.kind = j.value("kind", std::string{});
    if (j.contains("params") && !j.at("params").is_null()) {
        GqParams p;
        p.s = j.at("params").at("s").get<long>();
        p.t = j.at("params").at("t").get<long>();
        p.alpha = j.at("params").at("alpha").get<long>();
        is.params = p;
    }
    const auto& pts = j.at("points");
    is.point_types.resize(pts.size());
    for (const auto& jp : pts)
        is.point_types.at(jp.at("id").get<std::uint32_t>()) = jp.at("type").get<std::string>();
    const auto& lines = j.at("lines");
    is.lines.resize(lines.size());
    is.line_types.resize(lines.size());
    for (const auto& jl : lines) {
        auto id = jl.at("id").get<std::uint32_t>();
        is.line_types.at(id) = jl.at("type").get<std::string>();
        auto lp = jl.at("points").get<std::vector<std::uint32_t>>();
        std::sort(lp.begin(), lp.end());
        is.lines.at(id) = std::move(lp);
    }
    return is;
}

json report_to_json(const MinWeightReport& rep) {
    json j;
    switch (rep.status) {
        case MwStatus::found: j["status"] = "found"; break;
        case MwStatus::none_within_wmax: j["status"] = "none_within_wmax"; break;
        case MwStatus::budget_exceeded: j["status"] = "budget_exceeded"; break;
    }
    if (rep.status == MwStatus::found) j["d"] = rep.d;
    j["w_max"] = rep.w_max;
    j["method"] = rep.method;
    j["complete"] = rep.complete;
    j["all_line_multiples"] = rep.all_line_multiples;
    j["tested"] = rep.tested;
    if (!rep.note.empty()) j["note"] = rep.note;
    json words = json::array();
    for (const auto& w : rep.words) words.push_back(json::array({w.support, w.values}));
    j["words"] = std::move(words);
    return j;
}

json profile_to_json(const RepairProfile& prof) {
    json j;
    j["gq"] = {{"kind", prof.kind}, {"p", prof.p}, {"s", prof.s}, {"t", prof.t}};
    j["r"] = prof.r;
    j["a"] = prof.a;
    j["tight_r"] = prof.tight_r;
    j["tight_a"] = prof.tight_a;
    j["closed_form_r"] = prof.closed_form_r;
    j["closed_form_a"] = prof.closed_form_a;
    j["uniform"] = prof.uniform;
    json per = json::array();
    for (const auto& sr : prof.per_symbol)
        per.push_back({{"i", sr.i}, {"r_i", sr.r_i}, {"a_i", sr.a_i}});
    j["per_symbol"] = std::move(per);
    if (!prof.unrepairable.empty()) j["unrepairable"] = prof.unrepairable;
    return j;
}

json code_to_json(const LinearCode& code,
                  const std::vector<std::vector<std::uint8_t>>& rows) {
    json j;
    j["p"] = code.p;
    j["length"] = code.length;
    j["k"] = code.k;
    json jrows = json::array();
    for (const auto& row : rows) jrows.push_back(row);
    j["rows"] = std::move(jrows);
    return j;
}

std::pair<unsigned, std::vector<std::vector<std::uint8_t>>> code_rows_from_json(
    const json& j) {
    unsigned p = j.at("p").get<unsigned>();
    std::vector<std::vector<std::uint8_t>> rows;
    for (const auto& jrow : j.at("rows"))
        rows.push_back(jrow.get<std::vector<std::uint8_t>>());
    return {p, std::move(rows)};
}

std::string to_alist(const std::vector<std::vector<std::uint8_t>>& rows) {
    if (rows.empty() || rows[0].empty())
        throw std::invalid_argument("cannot serialize an empty matrix");
    const std::size_t M = rows.size();
    const std::size_t N = rows[0].size();
    std::vector<std::vector<std::size_t>> col_idx(N), row_idx(M);
    for (std::size_t r = 0; r < M; ++r) {
        if (rows[r].size() != N) throw std::invalid_argument("ragged matrix");
        for (std::size_t c = 0; c < N; ++c)
            if (rows[r][c]) {
                col_idx[c].push_back(r + 1);
                row_idx[r].push_back(c + 1);
            }
    }
    std::size_t max_col = 0, max_row = 0;
    for (const auto& v : col_idx) max_col = std::max(max_col, v.size());
    for (const auto& v : row_idx) max_row = std::max(max_row, v.size());

    std::ostringstream out;
    auto line = [&](const std::vector<std::size_t>& xs) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) out << ' ';
            out << xs[i];
        }
        out << '\n';
    };
    out << N << ' ' << M << '\n';
    out << max_col << ' ' << max_row << '\n';
    std::vector<std::size_t> degs(N);
    for (std::size_t c = 0; c < N; ++c) degs[c] = col_idx[c].size();
    line(degs);
    degs.resize(M);
    for (std::size_t r = 0; r < M; ++r) degs[r] = row_idx[r].size();
    line(degs);
    for (std::size_t c = 0; c < N; ++c) line(col_idx[c]);
    for (std::size_t r = 0; r < M; ++r) line(row_idx[r]);
    return out.str();
}

std::vector<std::vector<std::uint8_t>> from_alist(const std::string& text) {
    std::istringstream in(text);
    std::size_t N = 0, M = 0, max_col = 0, max_row = 0;
    if (!(in >> N >> M)) throw std::invalid_argument("alist: missing size header");
    if (!(in >> max_col >> max_row))
        throw std::invalid_argument("alist: missing degree header");
    std::vector<std::size_t> col_deg(N), row_deg(M);
    for (auto& d : col_deg)
        if (!(in >> d)) throw std::invalid_argument("alist: truncated column degrees");
    for (auto& d : row_deg)
        if (!(in >> d)) throw std::invalid_argument("alist: truncated row degrees");
    std::vector<std::vector<std::uint8_t>> rows(M, std::vector<std::uint8_t>(N, 0));
    for (std::size_t c = 0; c < N; ++c) {
        for (std::size_t i = 0; i < col_deg[c]; ++i) {
            std::size_t r;
            if (!(in >> r) || r < 1 || r > M)
                throw std::invalid_argument("alist: bad column entry");
            rows[r - 1][c] = 1;
        }
    }
    // row-wise lists are redundant; validate them against the matrix
    for (std::size_t r = 0; r < M; ++r) {
        for (std::size_t i = 0; i < row_deg[r]; ++i) {
            std::size_t c;
            if (!(in >> c) || c < 1 || c > N)
                throw std::invalid_argument("alist: bad row entry");
            if (!rows[r][c - 1])
                throw std::invalid_argument("alist: row/column lists disagree");
        }
    }
    return rows;
}

std::string to_csv(const std::vector<std::vector<std::uint8_t>>& rows) {
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << static_cast<unsigned>(row[c]);
        }
        out << '\n';
    }
    return out.str();
}

std::vector<std::vector<std::uint8_t>> from_csv(const std::string& text) {
    std::vector<std::vector<std::uint8_t>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::uint8_t> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            row.push_back(static_cast<std::uint8_t>(std::stoul(cell)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace gqlrc
