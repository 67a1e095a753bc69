// Generated by scripts/make_named.py; do not edit by hand.
#ifndef METDIM_NAMED_DATA_HPP
#define METDIM_NAMED_DATA_HPP

namespace metdim::named_detail {

// Biggs-Smith graph (102 vertices, cubic, intersection array
// {3,2,2,2,1,1,1; 1,1,1,1,1,1,3}): orbital graph of PSL(2,17) on the
// 102 cosets of an S4 subgroup, self-paired suborbit of size 3.
inline const char* const BIGGS_SMITH_G6 =
    "~?@e??????A??G??A??G???????O?O???????????_?A???A???????????????????_???????_????C?A??????O??@????????@???@???CG????A???A???@???????C?_???_?????????????O???C????G??@@???????????????_???????A_???_??????_??O?????????G?A???????O??@???????_???????O??????G?????A??????????_A????GG?????@????C????????C????O????????a???O??A?????`????????????A???_???G???????O????C??C??????C????O???????_@???????????????I???????E?????????C_???????o????????????????o???????o?????????????????E????????I?????A_????????????????????g?????????????J????@G?????????????K???????????????H???C?????@_??????A??????E????????@O??????????A?????????@O?????A_?????????????B??????????????????A_????C?????W????????@???????W???????G??????????E?@??B?????????????????????W????A????????????S????A??????????A_??_???????o???????G????c???????????C???@G????????_???@_?????????????@?????????K???_?????g????????????_??";

}  // namespace metdim::named_detail

#endif  // METDIM_NAMED_DATA_HPP
