"""Log preprocessing for LinkPype.

Raw records become mining inputs in five steps:

1. Data cleaning: drop asset requests and unsuccessful responses.
2. User identification: map records to users by IP (and user agent).
3. Session identification: split each user's requests on inactivity and
   estimate per-page dwell time.
4. Path completion: re-insert pages reached through the back button.
5. Formatting: per-page (S, C) features for clustering and transactions for
   frequent-itemset mining.

Key Components:
    UserId, Visit, Session, PageStats, Transaction: Preprocessing data types.
    clean: Record-wise data cleaning.
    identify_users / sessionize: User and session identification.
    complete_paths: Back-navigation path completion against a site graph.
    page_stats / to_transactions: Formatting for the mining stages.
"""
