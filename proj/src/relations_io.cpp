#include <hilb/relations_io.hpp>

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace hilb {

std::vector<RelationSpec> load_relations(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_relations: cannot open " + path);
    nlohmann::json doc = nlohmann::json::parse(in);

    std::vector<RelationSpec> out;
    for (const auto& jr : doc.at("relations")) {
        RelationSpec r;
        r.name = jr.at("name").get<std::string>();
        for (const auto& jt : jr.at("terms")) {
            const auto& jc = jt.at("coeff");
            Rational coeff = jc.is_string() ? parse_rational(jc.get<std::string>())
                                            : Rational(jc.get<int64_t>());
            r.terms.push_back({jt.at("label").get<std::string>(), coeff});
        }
        for (const auto& jm : jr.at("modulus")) {
            Character chi{jm.at("char").at(0).get<int64_t>(), jm.at("char").at(1).get<int64_t>()};
            r.modulus.push_back({chi, jm.at("power").get<int64_t>()});
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace hilb
