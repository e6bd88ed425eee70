#include "errfloat/config.hpp"

#include <fstream>
#include <sstream>

namespace errfloat {

EEConfig load_config_file(const std::string& path, EEConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty()) continue;
        auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = trimmed.substr(0, eq);
        std::string value = trimmed.substr(eq + 1);
        if (key == "t_bits") base.t_bits = std::stoi(value);
        else if (key == "te_bits") base.te_bits = std::stoi(value);
        else if (key == "rthd") base.rthd = std::stod(value);
        else if (key == "eez") base.eez = std::stod(value);
        else if (key == "qeps") base.qeps = std::stod(value);
        else if (key == "k_min") base.k_min = std::stod(value);
        else if (key == "k_max") base.k_max = std::stod(value);
        else if (key == "c_min") base.c_min = std::stod(value);
        else if (key == "c_max") base.c_max = std::stod(value);
        else throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key " + key);
    }
    base.validate();
    return base;
}

}  // namespace errfloat
