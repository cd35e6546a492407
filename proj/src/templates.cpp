#include "cosbench/json_io.hpp"
#include "cosbench/promptkit.hpp"

#include <filesystem>
#include <fstream>

namespace cosbench {
namespace promptkit {

namespace {

namespace fs = std::filesystem;

struct Field {
    const char* key;
    std::string DemoTemplates::*member;
};

struct TemplateFile {
    const char* name;
    std::vector<Field> fields;
};

const std::vector<TemplateFile>& file_table() {
    static const std::vector<TemplateFile> table = {
        {"brick_1d_cot.json",
         {{"stack_line", &DemoTemplates::b1_cot_stack},
          {"remove_step", &DemoTemplates::b1_cot_remove},
          {"grab_step", &DemoTemplates::b1_cot_grab},
          {"final", &DemoTemplates::b1_cot_final}}},
        {"brick_1d_cos.json",
         {{"relation_line", &DemoTemplates::b1_cos_relation},
          {"sum_line", &DemoTemplates::b1_cos_sum},
          {"final", &DemoTemplates::b1_cos_final}}},
        {"brick_2d_cot.json",
         {{"intro", &DemoTemplates::b2_cot_intro},
          {"found_first", &DemoTemplates::b2_cot_found_first},
          {"found_next", &DemoTemplates::b2_cot_found_next},
          {"found_direct", &DemoTemplates::b2_cot_found_direct},
          {"remove_step", &DemoTemplates::b2_cot_remove},
          {"accessible", &DemoTemplates::b2_cot_accessible},
          {"final", &DemoTemplates::b2_cot_final},
          {"final_direct", &DemoTemplates::b2_cot_final_direct}}},
        {"brick_2d_cos.json",
         {{"intro", &DemoTemplates::b2_cos_intro},
          {"chain_line", &DemoTemplates::b2_cos_chain},
          {"final", &DemoTemplates::b2_cos_final},
          {"final_direct", &DemoTemplates::b2_cos_final_direct}}},
        {"nav_cot.json",
         {{"intro", &DemoTemplates::nav_cot_intro},
          {"start_line", &DemoTemplates::nav_cot_start},
          {"count_line", &DemoTemplates::nav_cot_count},
          {"count_line_single", &DemoTemplates::nav_cot_count_single},
          {"route_line", &DemoTemplates::nav_cot_route},
          {"conclusion", &DemoTemplates::nav_cot_conclusion},
          {"final", &DemoTemplates::nav_cot_final}}},
        {"nav_cos.json",
         {{"count_line", &DemoTemplates::nav_cos_count},
          {"count_line_single", &DemoTemplates::nav_cos_count_single},
          {"route_line", &DemoTemplates::nav_cos_route},
          {"result_line", &DemoTemplates::nav_cos_result},
          {"final", &DemoTemplates::nav_cos_final}}},
        {"nlvr_cot.json",
         {{"identify_intro", &DemoTemplates::nlvr_cot_identify_intro},
          {"identify_line", &DemoTemplates::nlvr_cot_identify},
          {"move_intro", &DemoTemplates::nlvr_cot_move_intro},
          {"move_line", &DemoTemplates::nlvr_cot_move},
          {"outro", &DemoTemplates::nlvr_cot_outro}}},
        {"nlvr_cos.json",
         {{"identify_intro", &DemoTemplates::nlvr_cos_identify_intro},
          {"identify_line", &DemoTemplates::nlvr_cos_identify},
          {"move_intro", &DemoTemplates::nlvr_cos_move_intro},
          {"move_line", &DemoTemplates::nlvr_cos_move}}},
    };
    return table;
}

} // namespace

const DemoTemplates& DemoTemplates::defaults() {
    static const DemoTemplates t;
    return t;
}

DemoTemplates DemoTemplates::load(const std::string& dir) {
    DemoTemplates t;
    for (const auto& file : file_table()) {
        fs::path path = fs::path(dir) / file.name;
        std::ifstream in(path);
        if (!in) continue;
        json j = json::parse(in);
        for (const auto& field : file.fields) {
            if (j.contains(field.key)) t.*(field.member) = j.at(field.key).get<std::string>();
        }
    }
    return t;
}

void DemoTemplates::save(const std::string& dir) const {
    fs::create_directories(dir);
    for (const auto& file : file_table()) {
        json j;
        j["schema_version"] = 1;
        for (const auto& field : file.fields) j[field.key] = this->*(field.member);
        std::ofstream out(fs::path(dir) / file.name, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error(std::string("cannot write template file ") + file.name);
        out << j.dump(2) << "\n";
    }
}

} // namespace promptkit
} // namespace cosbench
