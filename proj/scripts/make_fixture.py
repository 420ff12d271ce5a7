#!/usr/bin/env python3
"""Generate the committed 200-row test fixture.

Same 45-column layout as the UNSW-NB15 10% train/test CSVs, with
class-dependent feature distributions so every classifier kind can beat the
majority-class rate on it. Deterministic; run once, commit the CSV.
"""

import numpy as np

COLUMNS = [
    "id", "dur", "proto", "service", "state", "spkts", "dpkts", "sbytes",
    "dbytes", "rate", "sttl", "dttl", "sload", "dload", "sloss", "dloss",
    "sinpkt", "dinpkt", "sjit", "djit", "swin", "stcpb", "dtcpb", "dwin",
    "tcprtt", "synack", "ackdat", "smean", "dmean", "trans_depth",
    "response_body_len", "ct_srv_src", "ct_state_ttl", "ct_dst_ltm",
    "ct_src_dport_ltm", "ct_dst_sport_ltm", "ct_dst_src_ltm", "is_ftp_login",
    "ct_ftp_cmd", "ct_flw_http_mthd", "ct_src_ltm", "ct_srv_dst",
    "is_sm_ips_ports", "attack_cat", "label",
]

CLASS_ROWS = [
    ("Normal", 60), ("Generic", 30), ("Exploits", 25), ("Fuzzers", 20),
    ("DoS", 15), ("Reconnaissance", 15), ("Analysis", 10), ("Backdoor", 10),
    ("Shellcode", 10), ("Worms", 5),
]

CLASS_ID = {name: i for i, (name, _) in enumerate(CLASS_ROWS)}

PROTO_P = {
    "Normal": (("tcp", 0.6), ("udp", 0.3), ("arp", 0.1)),
    "Generic": (("udp", 0.8), ("tcp", 0.2)),
    "Exploits": (("tcp", 0.7), ("udp", 0.3)),
    "Fuzzers": (("tcp", 0.5), ("udp", 0.4), ("ospf", 0.1)),
    "DoS": (("tcp", 0.8), ("udp", 0.2)),
    "Reconnaissance": (("tcp", 0.6), ("icmp", 0.3), ("udp", 0.1)),
    "Analysis": (("tcp", 0.7), ("udp", 0.3)),
    "Backdoor": (("tcp", 0.8), ("udp", 0.2)),
    "Shellcode": (("tcp", 0.9), ("udp", 0.1)),
    "Worms": (("icmp", 0.6), ("tcp", 0.4)),
}

SERVICE_P = {
    "Normal": (("http", 0.3), ("dns", 0.3), ("smtp", 0.2), ("-", 0.2)),
    "Generic": (("dns", 0.6), ("-", 0.4)),
    "Exploits": (("-", 0.5), ("http", 0.3), ("ftp", 0.2)),
    "Fuzzers": (("-", 0.7), ("http", 0.3)),
    "DoS": (("-", 0.8), ("http", 0.2)),
    "Reconnaissance": (("-", 0.8), ("dns", 0.2)),
    "Analysis": (("-", 0.6), ("http", 0.4)),
    "Backdoor": (("-", 0.7), ("ssh", 0.3)),
    "Shellcode": (("-", 0.8), ("irc", 0.2)),
    "Worms": (("-", 0.9), ("smtp", 0.1)),
}

STATE_P = {
    "Normal": (("FIN", 0.7), ("CON", 0.3)),
    "Generic": (("INT", 0.7), ("CON", 0.3)),
    "Exploits": (("FIN", 0.5), ("INT", 0.5)),
    "Fuzzers": (("INT", 0.6), ("FIN", 0.4)),
    "DoS": (("INT", 0.7), ("REQ", 0.3)),
    "Reconnaissance": (("INT", 0.6), ("REQ", 0.4)),
    "Analysis": (("INT", 0.8), ("FIN", 0.2)),
    "Backdoor": (("INT", 0.7), ("RST", 0.3)),
    "Shellcode": (("INT", 0.9), ("RST", 0.1)),
    "Worms": (("INT", 0.8), ("REQ", 0.2)),
}


def pick(rng, table):
    names = [n for n, _ in table]
    probs = [p for _, p in table]
    return names[rng.choice(len(names), p=probs)]


def make_row(rng, row_id, cat):
    cid = CLASS_ID[cat]
    attack = cat != "Normal"

    proto = pick(rng, PROTO_P[cat])
    service = pick(rng, SERVICE_P[cat])
    state = pick(rng, STATE_P[cat])

    dur = rng.gamma(2.0, 0.6) if not attack else rng.gamma(1.2, 0.08 + 0.02 * cid)
    spkts = max(1, int(rng.poisson(10 if not attack else 4 + cid)))
    dpkts = max(0, int(rng.poisson(8 if not attack else max(0, 3 - cid // 3))))
    smean = int(rng.integers(60, 200)) + 30 * cid
    dmean = int(rng.integers(60, 1200)) if not attack else int(rng.integers(0, 90))
    sbytes = spkts * smean
    dbytes = dpkts * dmean
    rate = (spkts + dpkts) / max(dur, 1e-3)
    sttl = int(rng.choice([62, 63, 64])) if not attack else int(rng.choice([254, 255]))
    dttl = int(rng.choice([252, 253])) if not attack else int(rng.choice([0, 252]))
    sload = sbytes * 8.0 / max(dur, 1e-3)
    dload = dbytes * 8.0 / max(dur, 1e-3)
    sloss = int(rng.poisson(1.0)) if not attack else int(rng.poisson(0.2))
    dloss = int(rng.poisson(2.0)) if not attack else 0
    sinpkt = dur * 1000.0 / max(spkts, 1)
    dinpkt = dur * 1000.0 / max(dpkts, 1) if dpkts else 0.0
    sjit = rng.gamma(1.5, 8.0) * (1.0 + 0.3 * cid)
    djit = rng.gamma(1.5, 5.0) if not attack else 0.0
    swin = 255 if proto == "tcp" else 0
    stcpb = int(rng.integers(1, 2**31)) if proto == "tcp" else 0
    dtcpb = int(rng.integers(1, 2**31)) if proto == "tcp" and not attack else 0
    dwin = 255 if proto == "tcp" and not attack else 0
    tcprtt = rng.gamma(2.0, 0.05) if proto == "tcp" and not attack else 0.0
    synack = tcprtt * 0.4
    ackdat = tcprtt * 0.6
    trans_depth = 0  # constant on purpose
    response_body_len = int(rng.integers(200, 12000)) if service == "http" and not attack else 0
    ct_srv_src = int(rng.integers(1, 8)) if not attack else int(rng.integers(10, 40))
    ct_state_ttl = int(rng.integers(0, 2)) if not attack else int(rng.integers(2, 7))
    ct_dst_ltm = int(rng.integers(1, 6)) if not attack else int(rng.integers(4, 30))
    ct_src_dport_ltm = int(rng.integers(1, 4)) if not attack else int(rng.integers(3, 25))
    ct_dst_sport_ltm = int(rng.integers(1, 3)) if not attack else int(rng.integers(2, 20))
    ct_dst_src_ltm = int(rng.integers(1, 6)) if not attack else int(rng.integers(4, 30))
    is_ftp_login = 1 if service == "ftp" and rng.random() < 0.5 else 0
    ct_ftp_cmd = is_ftp_login
    ct_flw_http_mthd = int(rng.integers(1, 4)) if service == "http" else 0
    ct_src_ltm = int(rng.integers(1, 6)) if not attack else int(rng.integers(3, 25))
    ct_srv_dst = int(rng.integers(1, 8)) if not attack else int(rng.integers(8, 40))
    is_sm_ips_ports = 1 if (attack and rng.random() < 0.05) else 0

    return [
        row_id, round(dur, 6), proto, service, state, spkts, dpkts, sbytes,
        dbytes, round(rate, 6), sttl, dttl, round(sload, 4), round(dload, 4),
        sloss, dloss, round(sinpkt, 4), round(dinpkt, 4), round(sjit, 4),
        round(djit, 4), swin, stcpb, dtcpb, dwin, round(tcprtt, 6),
        round(synack, 6), round(ackdat, 6), smean, dmean, trans_depth,
        response_body_len, ct_srv_src, ct_state_ttl, ct_dst_ltm,
        ct_src_dport_ltm, ct_dst_sport_ltm, ct_dst_src_ltm, is_ftp_login,
        ct_ftp_cmd, ct_flw_http_mthd, ct_src_ltm, ct_srv_dst, is_sm_ips_ports,
        cat, 0 if cat == "Normal" else 1,
    ]


def main():
    rng = np.random.default_rng(7)
    rows = []
    row_id = 1
    for cat, count in CLASS_ROWS:
        for _ in range(count):
            rows.append(make_row(rng, row_id, cat))
            row_id += 1
    # Shuffle so class blocks are not contiguous.
    order = rng.permutation(len(rows))
    rows = [rows[i] for i in order]
    for new_id, row in enumerate(rows, start=1):
        row[0] = new_id

    with open("data/fixture_unsw_nb15.csv", "w", newline="") as f:
        f.write(",".join(COLUMNS) + "\n")
        for row in rows:
            f.write(",".join(str(v) for v in row) + "\n")
    print(f"wrote {len(rows)} rows")


if __name__ == "__main__":
    main()
