#include "prequant/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace prequant {

void Report::comment(std::string text) { lines_.push_back({true, {}, std::move(text)}); }

void Report::add(std::string key, std::string value) {
    if (key.empty() || key.find_first_of("=# \t\n") != std::string::npos)
        throw std::logic_error("bad report key '" + key + "'");
    if (value.find('\n') != std::string::npos)
        throw std::logic_error("report value for " + key + " spans lines");
    lines_.push_back({false, std::move(key), std::move(value)});
}

std::string Report::render(Format format) const {
    std::ostringstream out;
    std::size_t width = 0;
    for (const auto& l : lines_)
        if (!l.is_comment)
            width = std::max(width, l.key.size());
    for (const auto& l : lines_) {
        if (format == Format::machine) {
            if (l.is_comment)
                out << "# " << l.value << '\n';
            else
                out << l.key << '=' << l.value << '\n';
        } else if (l.is_comment) {
            out << "-- " << l.value << " --\n";
        } else {
            out << l.key << std::string(width - l.key.size() + 2, ' ') << l.value << '\n';
        }
    }
    return out.str();
}

std::map<std::string, std::string> parse_machine_report(std::string_view text) {
    std::map<std::string, std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty() || line[0] == '#')
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("report line " + std::to_string(number) + " is not key=value");
        if (!out.emplace(line.substr(0, eq), line.substr(eq + 1)).second)
            throw std::invalid_argument("duplicate report key '" + line.substr(0, eq) + "'");
    }
    return out;
}

std::string join_rows(const std::vector<IntVector>& rows) {
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i)
            out += ';';
        out += join(rows[i]);
    }
    return out;
}

std::vector<IntVector> parse_rows(std::string_view text, std::size_t width) {
    std::vector<IntVector> rows;
    if (text.empty())
        return rows;
    std::size_t start = 0;
    while (true) {
        auto semi = text.find(';', start);
        IntVector row = parse_integer_list(text.substr(start, semi == std::string_view::npos ? semi : semi - start));
        if (row.size() != width)
            throw std::invalid_argument("row of length " + std::to_string(row.size()) + ", expected " +
                                        std::to_string(width));
        rows.push_back(std::move(row));
        if (semi == std::string_view::npos)
            break;
        start = semi + 1;
    }
    return rows;
}

namespace {

std::vector<IntVector> matrix_rows(const IntMatrix& M) {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < M.rows(); ++i)
        rows.push_back(M.row(i));
    return rows;
}

const std::string& need(const std::map<std::string, std::string>& keys, const std::string& key) {
    auto it = keys.find(key);
    if (it == keys.end())
        throw std::invalid_argument("report has no key '" + key + "'");
    return it->second;
}

std::size_t need_size(const std::map<std::string, std::string>& keys, const std::string& key) {
    Integer v = parse_integer(need(keys, key));
    if (v < 0 || !v.fits_ulong_p())
        throw std::invalid_argument("bad size for " + key);
    return v.get_ui();
}

}  // namespace

void add_toric_data(Report& report, const ToricData& T) {
    report.add("n", std::to_string(T.n));
    report.add("d", std::to_string(T.d));
    report.add("k", std::to_string(T.k));
    report.add("beta", join_rows(matrix_rows(T.beta)));
    report.add("kappa", join_rows(T.kappa.vectors));
    report.add("iota", join_rows(matrix_rows(T.iota)));
    report.add("a", join(T.a));
    report.add("p", join(T.p));
    report.add("chern", join(T.chern));
    report.add("rational", rationality_check(T));
    report.add("hbar", T.hbar ? to_string(*T.hbar) : std::string("none"));
    report.add("monotone", T.N_M.has_value());
    report.add("N_M", T.N_M ? to_string(*T.N_M) : std::string("none"));
    report.add("k0", join_rows(T.k0.vectors));
    report.add("cpn", is_cpn(T));
    report.add("b", join(T.b));
}

ToricData toric_data_from_report(const std::map<std::string, std::string>& keys) {
    ToricData T;
    T.n = need_size(keys, "n");
    T.d = need_size(keys, "d");
    T.k = need_size(keys, "k");
    T.beta = IntMatrix::from_rows(parse_rows(need(keys, "beta"), T.n), T.n);
    T.kappa.ambient_dim = T.n;
    T.kappa.vectors = parse_rows(need(keys, "kappa"), T.n);
    T.iota = IntMatrix::from_rows(parse_rows(need(keys, "iota"), T.k), T.k);
    T.a = parse_rational_list(need(keys, "a"));
    T.p = parse_rational_list(need(keys, "p"));
    T.chern = parse_integer_list(need(keys, "chern"));
    if (const auto& h = need(keys, "hbar"); h != "none")
        T.hbar = parse_integer(h);
    if (const auto& m = need(keys, "N_M"); m != "none")
        T.N_M = parse_integer(m);
    T.k0.ambient_dim = T.k;
    T.k0.vectors = parse_rows(need(keys, "k0"), T.k);
    T.b = parse_integer_list(need(keys, "b"));
    return T;
}

}  // namespace prequant
