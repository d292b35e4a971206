#include "ckrep/config.hpp"

#include "ckrep/errors.hpp"
#include "ckrep/rational.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ckrep {

void RunConfig::validate() const {
    if (!(tol_eigen > 0 && tol_membership > 0 && tol_classify > 0 && tol_compare > 0))
        throw DomainError("config: tolerances must be positive");
    if (pmax < 1 || qmax < 1) throw DomainError("config: pmax/qmax must be positive");
    if (max_len < 1 || length_cap < 1) throw DomainError("config: word-length caps must be positive");
    if (max_len > length_cap) throw DomainError("config: max_len exceeds length_cap");
    if (!(epsilon > 0)) throw DomainError("config: epsilon must be positive");
    if (mode != "auto" && mode != "exact" && mode != "float")
        throw DomainError("config: mode must be auto, exact or float");
    if (format != "table" && format != "json")
        throw DomainError("config: format must be table or json");
}

namespace {

void apply_entry(RunConfig& cfg, const std::string& key, const std::string& value, long line) {
    try {
        if (key == "tol_eigen")
            cfg.tol_eigen = std::stod(value);
        else if (key == "tol_membership")
            cfg.tol_membership = std::stod(value);
        else if (key == "tol_classify")
            cfg.tol_classify = std::stod(value);
        else if (key == "tol_compare")
            cfg.tol_compare = std::stod(value);
        else if (key == "pmax")
            cfg.pmax = std::stol(value);
        else if (key == "qmax")
            cfg.qmax = std::stoll(value);
        else if (key == "max_len")
            cfg.max_len = static_cast<std::size_t>(std::stoul(value));
        else if (key == "length_cap")
            cfg.length_cap = static_cast<std::size_t>(std::stoul(value));
        else if (key == "epsilon")
            cfg.epsilon = std::stod(value);
        else if (key == "mode")
            cfg.mode = value;
        else if (key == "format")
            cfg.format = value;
        else
            throw ParseError("unknown config key '" + key + "'", line);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad value for config key '" + key + "'", line);
    } catch (const std::out_of_range&) {
        throw ParseError("value out of range for config key '" + key + "'", line);
    }
}

void load_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed;
        for (char c : line) {
            if (c == '#') break;
            trimmed += c;
        }
        std::istringstream probe(trimmed);
        std::string word;
        if (!(probe >> word)) continue;  // blank / comment line
        auto eq = trimmed.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value", line_no);
        std::string key, value;
        {
            std::istringstream ks(trimmed.substr(0, eq));
            ks >> key;
            std::istringstream vs(trimmed.substr(eq + 1));
            vs >> value;
        }
        if (key.empty() || value.empty()) throw ParseError("expected key=value", line_no);
        apply_entry(cfg, key, value, line_no);
    }
}

}  // namespace

RunConfig load_config(const std::optional<std::string>& explicit_path) {
    RunConfig cfg;
    if (explicit_path) {
        load_file(cfg, *explicit_path);
    } else if (const char* env = std::getenv(kConfigEnvVar)) {
        std::ifstream probe(env);
        if (probe) load_file(cfg, env);
    }
    cfg.validate();
    return cfg;
}

}  // namespace ckrep
