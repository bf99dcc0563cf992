from defeasible.ranking.ranking import NO_RANK, Rank, RankPartition, assertion_rank, partition, rank
