from typing import Literal

Family = Literal["Gm", "Hm", "cayley", "random"]
OutputFormat = Literal["tsv", "json"]
ClaimStatus = Literal["pass", "fail", "vacuous"]

DEFAULT_FORMAT: OutputFormat = "tsv"
DEFAULT_SEED = 0
DEFAULT_TRIALS = 50

# códigos de saída da CLI
EXIT_HOLDS = 0
EXIT_VIOLATION = 1
EXIT_INAPPLICABLE = 2

FAMILY_CONFIG = {
    "Gm": {
        "nome": "G_m (r não divisível por 3)",
        "emoji": "🔗",
        "descricao": "Camadas N_0..N_r com um ciclo removido; m-regular, diâmetro r",
    },
    "Hm": {
        "nome": "H_m (r divisível por 3)",
        "emoji": "🧩",
        "descricao": "Camadas N_0..N_{r+1} com emparelhamentos removidos; 4m-regular, diâmetro r+1",
    },
    "cayley": {
        "nome": "Grafo de Cayley de Z_p",
        "emoji": "🔄",
        "descricao": "Vértices Z_p, aresta xy quando x-y ou y-x está em A",
    },
    "random": {
        "nome": "Regular aleatório conexo",
        "emoji": "🎲",
        "descricao": "Modelo de configuração com rejeição de laços, multiarestas e desconexos",
    },
}

THEOREM_REGULAR = "regular_ratio"
THEOREM_MIN_DEGREE = "min_degree"
THEOREM_LOOPS = "loops"
THEOREM_CAYLEY = "cauchy_davenport"

CLAIM_IDS = ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8")

CLAIM_DESCRIPTIONS = {
    "C1": "geodesic of length k has |N(V(P))| >= (floor(k/3)+1) delta",
    "C2": "insufficient vertex has eccentricity >= r+1",
    "C3": "pair with 2 < d < r has a sufficient member",
    "C4": "pair at distance r or r+1 with a far vertex z has a sufficient member",
    "C5": "pair at distance r has a sufficient member",
    "C6": "order >= ((r+3)/6) delta l",
    "C7": "insufficient x in X_i has |N^r(x)| >= |X_i| + (r/3) delta",
    "C8": "2e(G^r) - B(r) delta |G| - |G| >= sum (|X_i| - delta/2)^2",
}

EXTERNAL_R3_PROVENANCE = "external: DeVos–Thomassé"
