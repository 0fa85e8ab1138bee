#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace harmonia {

namespace {

struct Entry {
    const char* key;
    double Config::* field;
    bool is_int;
};

const Entry kEntries[] = {
    {"quad_rel_tol",       &Config::quad_rel_tol,    false},
    {"quad_abs_tol",       &Config::quad_abs_tol,    false},
    {"growth_fit_lo",      &Config::growth_fit_lo,   false},
    {"growth_fit_hi",      &Config::growth_fit_hi,   false},
    {"growth_step",        &Config::growth_step,     false},
    {"growth_tol_h",       &Config::growth_tol_h,    false},
    {"rank1_horizon",      &Config::rank1_horizon,   false},
    {"jacobi_step",        &Config::jacobi_step,     false},
    {"jacobi_horizon",     &Config::jacobi_horizon,  false},
    {"green_tail_cut",     &Config::green_tail_cut,  false},
    {"martin_s_min",       &Config::martin_s_min,    false},
    {"fd_step",            &Config::fd_step,         false},
    {"divergence_a_const", &Config::divergence_a_const, false},
    {"rank_tol",           &Config::rank_tol,        false},
};

struct IntEntry {
    const char* key;
    int Config::* field;
};

const IntEntry kIntEntries[] = {
    {"node_count",     &Config::node_count},
    {"fit_max_terms",  &Config::fit_max_terms},
    {"fit_max_degree", &Config::fit_max_degree},
};

void loadFile(Config& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!key.empty())
            cfg.set(key, val);
    }
}

}  // namespace

void Config::set(const std::string& key, const std::string& value)
{
    for (const auto& e : kEntries) {
        if (key == e.key) {
            this->*(e.field) = std::stod(value);
            return;
        }
    }
    for (const auto& e : kIntEntries) {
        if (key == e.key) {
            this->*(e.field) = std::stoi(value);
            return;
        }
    }
    throw std::invalid_argument("unknown config key: " + key);
}

double Config::get(const std::string& key) const
{
    for (const auto& e : kEntries)
        if (key == e.key)
            return this->*(e.field);
    for (const auto& e : kIntEntries)
        if (key == e.key)
            return this->*(e.field);
    throw std::invalid_argument("unknown config key: " + key);
}

std::map<std::string, double> Config::snapshot() const
{
    std::map<std::string, double> out;
    for (const auto& e : kEntries)
        out[e.key] = this->*(e.field);
    for (const auto& e : kIntEntries)
        out[e.key] = this->*(e.field);
    return out;
}

Config& Config::global()
{
    static Config cfg = [] {
        Config c;
        if (const char* path = std::getenv("HARMONIA_CONFIG"))
            loadFile(c, path);
        return c;
    }();
    return cfg;
}

}  // namespace harmonia
