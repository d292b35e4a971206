#include "ckrep/io.hpp"

#include "ckrep/errors.hpp"

#include <fstream>
#include <sstream>

namespace ckrep {

ZeroOneMatrix parse_matrix_stream(std::istream& in, const std::string& source_name) {
    std::string line;
    long line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok && tok[0] != '#') return true;  // skip blanks and comments
        }
        return false;
    };

    if (!next_line()) throw ParseError(source_name + ": missing size line", 1);
    std::size_t n = 0;
    {
        std::istringstream is(line);
        long v = 0;
        if (!(is >> v) || v < 2)
            throw ParseError(source_name + ": first line must be the size n >= 2", line_no);
        std::string extra;
        if (is >> extra)
            throw ParseError(source_name + ": unexpected token after size", line_no);
        n = static_cast<std::size_t>(v);
    }

    std::vector<int> entries;
    entries.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!next_line())
            throw ParseError(source_name + ": expected " + std::to_string(n) + " matrix rows",
                             line_no + 1);
        std::istringstream is(line);
        for (std::size_t c = 0; c < n; ++c) {
            int e = -1;
            if (!(is >> e) || (e != 0 && e != 1))
                throw ParseError(source_name + ": row must contain " + std::to_string(n) +
                                     " entries of 0 or 1",
                                 line_no);
            entries.push_back(e);
        }
        std::string extra;
        if (is >> extra) throw ParseError(source_name + ": too many entries in row", line_no);
    }
    return ZeroOneMatrix(n, entries);
}

ZeroOneMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path + "'");
    return parse_matrix_stream(in, path);
}

nlohmann::json diagnostics_json(const MatrixDiagnostics& d) {
    nlohmann::json j{{"nondegenerate", d.nondegenerate},
                     {"irreducible", d.irreducible},
                     {"permutation", d.permutation},
                     {"admissible", d.admissible()},
                     {"reason", d.reason}};
    if (d.witness) j["witness"] = {d.witness->first + 1, d.witness->second + 1};
    return j;
}

nlohmann::json lambda_point_json(const LambdaPoint& p) {
    nlohmann::json a = nlohmann::json::array(), x = nlohmann::json::array();
    nlohmann::json ax = nlohmann::json::array(), xx = nlohmann::json::array();
    for (std::size_t i = 0; i < p.n(); ++i) {
        a.push_back(p.a_d(i));
        x.push_back(p.x_d(i));
        ax.push_back(to_string(p.a()[i]));
        xx.push_back(to_string(p.x()[i]));
    }
    nlohmann::json j{{"a", a},
                     {"x", x},
                     {"residual", p.residual()},
                     {"mode", p.exact() ? "exact-rational" : "floating"}};
    if (p.exact()) {
        j["a_exact"] = ax;
        j["x_exact"] = xx;
    }
    return j;
}

nlohmann::json interval_system_json(const IntervalSystem& sys) {
    const std::size_t n = sys.n();
    nlohmann::json c = nlohmann::json::array(), c_exact = nlohmann::json::array();
    for (std::size_t i = 0; i <= n; ++i) {
        c.push_back(to_double(sys.c(i)));
        c_exact.push_back(to_string(sys.c(i)));
    }
    nlohmann::json cells = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& cell = sys.cell(i, j);
            if (!cell.present) continue;
            cells.push_back({{"i", i + 1},
                             {"j", j + 1},
                             {"lo", to_double(cell.lo)},
                             {"hi", to_double(cell.hi)},
                             {"lo_exact", to_string(cell.lo)},
                             {"hi_exact", to_string(cell.hi)},
                             {"offset_exact", to_string(cell.offset)}});
        }
    return nlohmann::json{{"c", c},
                          {"c_exact", c_exact},
                          {"cells", cells},
                          {"tiling_defect", sys.tiling_defect()},
                          {"mode", sys.exact() ? "exact-rational" : "floating"}};
}

nlohmann::json step_function_json(const StepFunction<double>& f) {
    nlohmann::json bp = nlohmann::json::array(), vals = nlohmann::json::array();
    for (const auto& t : f.breakpoints()) bp.push_back(to_double(t));
    for (double v : f.values()) vals.push_back(v);
    return nlohmann::json{{"breakpoints", bp}, {"values", vals}};
}

nlohmann::json step_function_json(const StepFunction<Radical>& f) {
    nlohmann::json bp = nlohmann::json::array(), vals = nlohmann::json::array();
    nlohmann::json bpe = nlohmann::json::array(), vale = nlohmann::json::array();
    for (const auto& t : f.breakpoints()) {
        bp.push_back(to_double(t));
        bpe.push_back(to_string(t));
    }
    for (const auto& v : f.values()) {
        vals.push_back(v.to_double());
        vale.push_back(v.str());
    }
    return nlohmann::json{{"breakpoints", bp},
                          {"values", vals},
                          {"breakpoints_exact", bpe},
                          {"values_exact", vale}};
}

}  // namespace ckrep
