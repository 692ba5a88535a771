#include "laxdesc/frontend/printer.hpp"

#include <sstream>

namespace laxdesc::frontend {

namespace {

std::string join(const std::vector<Name>& names) {
  std::string s;
  for (size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i].text;
  return s;
}

struct BodyPrinter {
  std::ostringstream& out;
  const std::string& name;

  void operator()(const CategoryDecl& c) const {
    out << "category " << name << " {\n  objects: " << join(c.objects) << ";\n";
    for (const auto& h : c.homs) out << "  hom(" << h.src.text << ", " << h.tgt.text << "): " << join(h.arrows) << ";\n";
    for (const auto& k : c.composites) out << "  compose: " << k.g.text << " . " << k.f.text << " = " << k.h.text << ";\n";
    out << "}\n";
  }
  void operator()(const MapDecl& m) const {
    out << "map " << name << " : [" << m.dom << "] -> [" << m.cod << "] = [";
    for (size_t i = 0; i < m.img.size(); ++i) out << (i ? ", " : "") << m.img[i];
    out << "]\n";
  }
  void operator()(const MonoidDecl& m) const {
    out << "monoid " << name << " { " << join(m.elements);
    for (size_t i = 0; i < m.products.size(); ++i) {
      const auto& p = m.products[i];
      out << (i ? ", " : "; ") << p.x.text << " . " << p.y.text << " = " << p.z.text;
    }
    out << " }\n";
  }
  void operator()(const PrecategoryDecl& p) const {
    out << "precategory " << name << " = " << p.kind << "(";
    if (p.kind == "discrete")
      out << p.count;
    else
      out << p.ref->text;
    out << ")\n";
  }
  void operator()(const IndexedDecl& x) const {
    out << "indexed " << name << " = " << x.kind << "(";
    if (x.ref) out << x.ref->text << ", ";
    out << "bound = " << x.bound << ")\n";
  }
  void operator()(const PseudofunctorDecl& p) const {
    out << "pseudofunctor " << name << " = ";
    if (p.kind == "constant")
      out << "constant(" << p.first.text << ")\n";
    else
      out << p.first.text << " . " << p.second->text << "\n";
  }
  void operator()(const FunctorDecl& f) const {
    out << "functor " << name << " : " << f.src.text << " -> " << f.tgt.text << " {\n";
    for (const auto& a : f.assigns) out << "  " << a.from.text << " -> " << a.to.text << ";\n";
    out << "}\n";
  }
  void operator()(const NatTransDecl& t) const {
    out << "nattrans " << name << " : " << t.src.text << " => " << t.tgt.text << " {\n";
    for (const auto& c : t.components) out << "  " << c.at.text << ": " << c.mor.text << ";\n";
    out << "}\n";
  }
  void operator()(const AdjunctionDecl& a) const {
    out << "adjunction " << name << " : " << a.left.text << " -| " << a.right.text << "\n";
  }
};

}  // namespace

std::string print(const Decl& d) {
  std::ostringstream out;
  std::visit(BodyPrinter{out, d.name.text}, d.body);
  return out.str();
}

std::string print(const Document& doc) {
  std::string s;
  for (size_t i = 0; i < doc.decls.size(); ++i) s += (i ? "\n" : "") + print(doc.decls[i]);
  return s;
}

}  // namespace laxdesc::frontend
