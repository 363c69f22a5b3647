#pragma once

#include "coringlab/cring.hpp"
#include "coringlab/catalog.hpp"

namespace coringlab::doc {

struct Diagnostic {
    int line = 0, col = 0;
    std::string message;
};

struct MapDecl {
    std::vector<std::string> src, dst;  // declared space names
    Mat mat;
    int line = 0, col = 0;
};

/// One attribute of an object declaration; the schema fixes which keys of
/// which type each kind accepts.
struct Attr {
    enum class Kind { ref, text, scalar_vec, flag, integer, name_list, name_map };
    Kind kind = Kind::ref;
    std::string text;
    std::vector<Rat> scalars;
    bool flag = false;
    long integer = 0;
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> pairs;

    static Attr ref(std::string v);
    static Attr enum_text(std::string v);
    static Attr vec(std::vector<Rat> v);
    static Attr boolean(bool v);
    static Attr number(long v);
    static Attr list(std::vector<std::string> v);
    static Attr table(std::vector<std::pair<std::string, std::string>> v);
};

struct ObjectDecl {
    std::string kind;
    std::vector<std::pair<std::string, Attr>> attrs;
    int line = 0, col = 0;

    const Attr* find(const std::string& key) const;
    const std::string& ref(const std::string& key) const;  // throws if missing
};

struct SpecDocument {
    Field field;
    std::vector<std::pair<std::string, VectorSpace>> spaces;
    std::vector<std::pair<std::string, MapDecl>> maps;
    std::vector<std::pair<std::string, ObjectDecl>> objects;

    const VectorSpace* find_space(const std::string& name) const;
    const MapDecl* find_map(const std::string& name) const;
    const ObjectDecl* find_object(const std::string& name) const;
};

struct ParseResult {
    std::optional<SpecDocument> document;
    std::vector<Diagnostic> diagnostics;
};

/// Total parser: every failure is a positioned diagnostic, never an exception.
ParseResult parse_document(const std::string& text);
std::string emit_document(const SpecDocument& d);
bool same_document(const SpecDocument& a, const SpecDocument& b);

/// Assembly helpers; adding an existing name verifies it is identical.
void ensure_space(SpecDocument& d, const std::string& name, const VectorSpace& v);
void ensure_map(SpecDocument& d, const std::string& name, std::vector<std::string> src,
                std::vector<std::string> dst, const Mat& m);
void add_object(SpecDocument& d, const std::string& name, ObjectDecl obj);

/// Resolved, typed view over a parsed document. Builders throw Error on
/// semantic mismatches (wrong kind, wrong shapes).
class Workbench {
public:
    explicit Workbench(SpecDocument d) : d_(std::move(d)) {}
    const SpecDocument& document() const { return d_; }

    VectorSpace space(const std::string& name) const;
    LinearMap map(const std::string& name) const;

    Algebra algebra(const std::string& name) const;
    Coalgebra coalgebra(const std::string& name) const;
    Bialgebra bialgebra(const std::string& name) const;
    HopfAlgebra hopf(const std::string& name) const;
    Bimodule bimodule(const std::string& name) const;
    Bicomodule bicomodule(const std::string& name) const;
    Coring coring(const std::string& name) const;
    Entwining entwining(const std::string& name) const;
    CRing cring(const std::string& name) const;
    Character character(const std::string& name) const;
    Cointegral cointegral(const std::string& name) const;
    Coderivation coderivation(const std::string& name) const;
    TruncatedDGA dga(const std::string& name) const;
    EntwinedModule entwined_module(const std::string& name) const;
    std::vector<Rat> grouplike_vector(const std::string& name) const;
    GrouplikeFlavor grouplike_flavor(const std::string& name) const;

    /// Runs the checker matching the object's kind.
    Report check_object(const std::string& name) const;
    std::vector<std::string> object_names() const;

private:
    SpecDocument d_;
    const ObjectDecl& obj(const std::string& name, const char* expected_kind = nullptr) const;
};

/// Document emitters for library values.
void emit_algebra(SpecDocument& d, const std::string& name, const std::string& space_name,
                  const Algebra& a);
void emit_coalgebra(SpecDocument& d, const std::string& name, const std::string& space_name,
                    const Coalgebra& c);
void emit_hopf(SpecDocument& d, const std::string& name, const std::string& space_name,
               const HopfAlgebra& h);
void emit_coring(SpecDocument& d, const std::string& name, const std::string& algebra_obj,
                 const std::string& space_name, const Coring& c);
void emit_grouplike(SpecDocument& d, const std::string& name, const std::string& coring_obj,
                    const std::vector<Rat>& g, GrouplikeFlavor flavor);
void emit_entwining(SpecDocument& d, const std::string& name, const std::string& algebra_obj,
                    const std::string& coalgebra_obj, const Entwining& e);
void emit_cring(SpecDocument& d, const std::string& name, const std::string& coalgebra_obj,
                const std::string& space_name, const CRing& r);
void emit_character(SpecDocument& d, const std::string& name, const std::string& owner_obj,
                    bool over_cring, const LinearMap& kappa);
void emit_cointegral(SpecDocument& d, const std::string& name, const std::string& coalgebra_obj,
                     const Cointegral& del);
void emit_dga(SpecDocument& d, const std::string& name, const std::string& algebra_obj,
              const TruncatedDGA& dga);
void emit_cring_module(SpecDocument& d, const std::string& name, const std::string& cring_obj,
                       const std::string& space_name, const CRing& r, const CRingModule& m);
void emit_coring_comodule(SpecDocument& d, const std::string& name, const std::string& coring_obj,
                          const std::string& space_name, const Coring& c,
                          const CoringComodule& m);
void emit_module_connection(SpecDocument& d, const std::string& name,
                            const std::string& coring_obj, const std::string& grouplike_obj,
                            const std::string& module_obj, const RoiterData& R,
                            const ModuleConnection& conn);
void emit_cring_connection(SpecDocument& d, const std::string& name, const std::string& cring_obj,
                           const std::string& character_obj, const std::string& space_name,
                           int degree, const CRing& r, const ComoduleConnection& conn);

/// Built-in example documents.
std::vector<std::string> example_names();
SpecDocument example_document(const std::string& name, const Field& F);

}  // namespace coringlab::doc
