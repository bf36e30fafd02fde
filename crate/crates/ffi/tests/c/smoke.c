#include <stdio.h>
#include <string.h>
#include "noncomm.h"

int main(void) {
    NcGroup *g = NULL;
    NcGraph *gr = NULL;
    size_t n = 0, m = 0;
    double e = 0.0;
    char *exact = NULL;
    if (nc_group_parse("dihedral:5", 10000, &g) != NC_STATUS_OK) return 1;
    if (nc_graph_noncommuting(g, &gr) != NC_STATUS_OK) return 2;
    nc_graph_vertex_count(gr, &n);
    nc_graph_edge_count(gr, &m);
    if (nc_graph_energy(gr, &e, &exact) != NC_STATUS_OK) return 3;
    printf("%zu %zu %s %.6f\n", n, m, exact, e);
    nc_string_free(exact);
    nc_graph_free(gr);
    nc_group_free(g);
    if (nc_group_parse("nonsense", 10000, &g) != NC_STATUS_PARSE) return 4;
    if (strlen(nc_last_error_message()) == 0) return 5;
    return 0;
}
