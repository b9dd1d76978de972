#include <fstream>

#include "piltz/error.hpp"
#include "piltz/field_io.hpp"

namespace piltz {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (auto a : allowed) known = known || key == a;
        require(known, ErrorCode::InvalidField, where + ": unknown key '" + key + "'");
    }
}

FieldInvariants invariants_from_json(const json& obj) {
    require(obj.is_object(), ErrorCode::InvalidField, "invariants must be an object");
    reject_unknown_keys(obj, {"h", "R", "w"}, "invariants");
    require(obj.contains("h") && obj.contains("R") && obj.contains("w"), ErrorCode::InvalidField,
            "invariants need h, R and w");
    require(obj["h"].is_number_integer() && obj["w"].is_number_integer() && obj["R"].is_number(),
            ErrorCode::InvalidField, "invariants have the wrong types");
    return {obj["h"].get<std::int64_t>(), obj["R"].get<double>(), obj["w"].get<std::int64_t>()};
}

}  // namespace

FieldDescriptor field_from_json(const json& obj) {
    require(obj.is_object(), ErrorCode::InvalidField, "field descriptor must be a JSON object");
    reject_unknown_keys(obj, {"label", "type", "d", "coeffs", "invariants"}, "field");
    require(obj.contains("label") && obj["label"].is_string(), ErrorCode::InvalidField, "missing string 'label'");
    require(obj.contains("type") && obj["type"].is_string(), ErrorCode::InvalidField, "missing string 'type'");
    const auto type = obj["type"].get<std::string>();
    const auto label = obj["label"].get<std::string>();

    FieldDescriptor field = make_rational_field();
    if (type == "quadratic") {
        require(obj.contains("d") && obj["d"].is_number_integer() && !obj.contains("coeffs"), ErrorCode::InvalidField,
                label + ": quadratic fields take an integer 'd' and no 'coeffs'");
        field = make_quadratic_field(obj["d"].get<std::int64_t>());
    } else if (type == "monogenic") {
        require(obj.contains("coeffs") && obj["coeffs"].is_array() && !obj.contains("d"), ErrorCode::InvalidField,
                label + ": monogenic fields take a 'coeffs' array and no 'd'");
        std::vector<std::int64_t> coeffs;
        for (const auto& c : obj["coeffs"]) {
            require(c.is_number_integer(), ErrorCode::InvalidField, label + ": coefficients must be integers");
            coeffs.push_back(c.get<std::int64_t>());
        }
        field = make_monogenic_field(coeffs);
    } else if (type == "rational") {
        require(!obj.contains("d") && !obj.contains("coeffs"), ErrorCode::InvalidField,
                label + ": the rational field takes no defining data");
    } else {
        fail(ErrorCode::InvalidField, label + ": unknown type '" + type + "'");
    }
    field = field.with_label(label);
    if (obj.contains("invariants")) field = field.with_invariants(invariants_from_json(obj["invariants"]));
    return field;
}

json field_to_json(const FieldDescriptor& field) {
    json obj;
    obj["label"] = field.label();
    obj["type"] = to_string(field.presentation());
    if (field.is_quadratic()) obj["d"] = field.fundamental_discriminant();
    if (field.presentation() == Presentation::monogenic) obj["coeffs"] = field.coefficients();
    if (const auto& inv = field.invariants()) {
        obj["invariants"] = {{"h", inv->class_number}, {"R", inv->regulator}, {"w", inv->roots_of_unity}};
    }
    return obj;
}

std::vector<FieldDescriptor> load_fields(const std::filesystem::path& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorCode::Io, "cannot open field file " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidField, path.string() + ": " + e.what());
    }
    std::vector<FieldDescriptor> fields;
    if (doc.is_array()) {
        for (const auto& obj : doc) fields.push_back(field_from_json(obj));
    } else {
        fields.push_back(field_from_json(doc));
    }
    return fields;
}

void save_fields(const std::filesystem::path& path, const std::vector<FieldDescriptor>& fields) {
    json doc = json::array();
    for (const auto& f : fields) doc.push_back(field_to_json(f));
    std::ofstream out(path);
    require(static_cast<bool>(out), ErrorCode::Io, "cannot write " + path.string());
    out << doc.dump(2) << '\n';
}

const std::vector<FieldDescriptor>& builtin_fields() {
    static const std::vector<FieldDescriptor> fields = [] {
        std::vector<FieldDescriptor> out;
        out.push_back(make_rational_field());
        out.push_back(make_quadratic_field(-1).with_label("Qi").with_invariants({1, 1.0, 4}));
        out.push_back(make_quadratic_field(-3).with_label("Qsqrtm3").with_invariants({1, 1.0, 6}));
        out.push_back(make_quadratic_field(2).with_label("Qsqrt2").with_invariants({1, 0.881373587019543025, 2}));
        out.push_back(make_quadratic_field(5).with_label("Qsqrt5").with_invariants({1, 0.481211825059603447, 2}));
        // regulators of the monogenic fields: certified values, 18 significant digits
        out.push_back(make_monogenic_field({1, 0, -1, -1}).with_label("cubic23").with_invariants({1, 0.281199574322961847, 2}));
        out.push_back(make_monogenic_field({1, -1, 0, 0, -1}).with_label("quartic283").with_invariants({1, 0.378199332459569056, 2}));
        out.push_back(make_monogenic_field({1, 0, 0, 0, -1, -1}).with_label("quintic2869").with_invariants({1, 0.432343878824973521, 2}));
        return out;
    }();
    return fields;
}

FieldDescriptor find_field(const std::string& label, const std::filesystem::path& path) {
    const auto fields = path.empty() ? builtin_fields() : load_fields(path);
    for (const auto& f : fields) {
        if (f.label() == label) return f;
    }
    fail(ErrorCode::InvalidField, "no field labelled '" + label + "'" + (path.empty() ? std::string(" among the built-ins") : " in " + path.string()));
}

}  // namespace piltz
